#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ddrom {

/// Array shapes, grid sizes or mode counts that do not fit together.
class DimensionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid user configuration (parameter grids, generator settings, run configs).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-finite or otherwise unusable numerical input data.
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed on-disk container. Carries the byte offset where parsing failed.
class FormatError : public std::runtime_error {
public:
    FormatError(const std::string& what, std::uint64_t offset)
        : std::runtime_error(what + " (at byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}

    std::uint64_t offset() const noexcept { return offset_; }

private:
    std::uint64_t offset_;
};

/// Training diverged to a non-finite loss.
class TrainingError : public std::runtime_error {
public:
    TrainingError(int epoch, double param_norm)
        : std::runtime_error("non-finite loss at epoch " + std::to_string(epoch) + " (parameter norm " +
                             std::to_string(param_norm) + ")"),
          epoch_(epoch),
          param_norm_(param_norm) {}

    int epoch() const noexcept { return epoch_; }
    double param_norm() const noexcept { return param_norm_; }

private:
    int epoch_;
    double param_norm_;
};

}  // namespace ddrom
