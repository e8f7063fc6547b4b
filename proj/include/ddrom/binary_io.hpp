#pragma once

// Little-endian float64 containers with a one-line text header. Shared by the
// snapshot, POD basis and operator archive formats.

#include "ddrom/errors.hpp"

#include <Eigen/Dense>

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace ddrom::io {

inline std::uint64_t to_little_endian(std::uint64_t bits) {
    if constexpr (std::endian::native == std::endian::little) {
        return bits;
    } else {
        std::uint64_t out = 0;
        for (int b = 0; b < 8; ++b) out |= ((bits >> (8 * b)) & 0xffu) << (8 * (7 - b));
        return out;
    }
}

class BinaryWriter {
public:
    explicit BinaryWriter(const std::string& path);

    void header(const std::string& line);
    void f64(double value);
    void f64(std::span<const double> values);
    void f64(const Eigen::Ref<const Eigen::VectorXd>& values);
    void f64(const Eigen::VectorXd& values) { f64(Eigen::Ref<const Eigen::VectorXd>(values)); }
    /// Column-major dump of a dense matrix.
    void f64(const Eigen::MatrixXd& values);
    void close();

private:
    std::ofstream out_;
    std::string path_;
};

class BinaryReader {
public:
    explicit BinaryReader(const std::string& path);

    /// Reads the newline-terminated header and splits it on whitespace.
    std::vector<std::string> header(std::size_t max_length = 4096);
    double f64();
    void f64(std::span<double> out);
    Eigen::VectorXd vector(Eigen::Index n);
    Eigen::MatrixXd matrix(Eigen::Index rows, Eigen::Index cols);

    std::uint64_t offset() const noexcept { return offset_; }
    std::uint64_t size() const noexcept { return bytes_.size(); }
    bool at_end() const noexcept { return offset_ == bytes_.size(); }
    const std::string& path() const noexcept { return path_; }

    /// Throws FormatError unless `count` more float64 values are available.
    void require(std::uint64_t count, const std::string& what) const;

private:
    std::vector<char> bytes_;
    std::uint64_t offset_ = 0;
    std::string path_;
};

/// Shortest decimal text that parses back to the same double.
std::string exact(double value);

double parse_double(const std::string& token, std::uint64_t offset, const std::string& field);
long long parse_int(const std::string& token, std::uint64_t offset, const std::string& field);

}  // namespace ddrom::io
