#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include <vector>

namespace ddrom {

/// Per-column affine standardization x -> (x - mean) / scale.
/// Columns with zero spread keep scale 1 and are flagged constant.
struct Scaler {
    Eigen::VectorXd mean;
    Eigen::VectorXd scale;
    std::vector<bool> constant;

    static Scaler identity(int n);
    /// Rows are samples.
    static Scaler fit(const Eigen::MatrixXd& X);

    int size() const { return static_cast<int>(mean.size()); }
    bool is_identity() const;
    Eigen::MatrixXd normalize(const Eigen::MatrixXd& X) const;
    Eigen::MatrixXd denormalize(const Eigen::MatrixXd& Z) const;
    Eigen::VectorXd normalize(const Eigen::VectorXd& x) const;
    Eigen::VectorXd denormalize(const Eigen::VectorXd& z) const;

    nlohmann::json to_json() const;
    static Scaler from_json(const nlohmann::json& j);
    bool operator==(const Scaler& o) const;
};

}  // namespace ddrom
