#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace ddrom {

/// Dense rank-3 tensor T(i, j, k), k fastest.
class Tensor3 {
public:
    Tensor3() = default;
    Tensor3(int n0, int n1, int n2) : n_{n0, n1, n2}, data_(static_cast<std::size_t>(n0) * n1 * n2, 0.0) {}

    int dim(int axis) const noexcept { return n_[axis]; }
    std::size_t size() const noexcept { return data_.size(); }
    double& operator()(int i, int j, int k) { return data_[offset(i, j, k)]; }
    double operator()(int i, int j, int k) const { return data_[offset(i, j, k)]; }
    const std::vector<double>& data() const noexcept { return data_; }
    std::vector<double>& data() noexcept { return data_; }

    /// out_i = sum_jk T(i,j,k) x_j y_k
    Eigen::VectorXd contract(const Eigen::Ref<const Eigen::VectorXd>& x,
                             const Eigen::Ref<const Eigen::VectorXd>& y) const {
        Eigen::VectorXd out = Eigen::VectorXd::Zero(n_[0]);
        for (int i = 0; i < n_[0]; ++i)
            for (int j = 0; j < n_[1]; ++j) out[i] += x[j] * slice_row(i, j).dot(y);
        return out;
    }

    /// Matrix (T x)_ik = sum_j T(i,j,k) x_j, the linear map y -> contract(x, y).
    Eigen::MatrixXd contract_middle(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n_[0], n_[2]);
        for (int i = 0; i < n_[0]; ++i)
            for (int j = 0; j < n_[1]; ++j) out.row(i) += x[j] * slice_row(i, j).transpose();
        return out;
    }

    /// Jacobian of x -> contract(x, x) (requires n1 == n2).
    Eigen::MatrixXd quadratic_jacobian(const Eigen::Ref<const Eigen::VectorXd>& x) const {
        Eigen::MatrixXd out = contract_middle(x);
        for (int i = 0; i < n_[0]; ++i)
            for (int j = 0; j < n_[1]; ++j) out(i, j) += slice_row(i, j).dot(x);
        return out;
    }

    /// Leading sub-block.
    Tensor3 restrict(int m0, int m1, int m2) const {
        Tensor3 out(m0, m1, m2);
        for (int i = 0; i < m0; ++i)
            for (int j = 0; j < m1; ++j)
                for (int k = 0; k < m2; ++k) out(i, j, k) = (*this)(i, j, k);
        return out;
    }

    bool operator==(const Tensor3& o) const { return n_ == o.n_ && data_ == o.data_; }
    Tensor3& operator+=(const Tensor3& o) {
        for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
        return *this;
    }
    friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }

    double max_abs() const {
        double m = 0.0;
        for (double v : data_) m = std::max(m, std::abs(v));
        return m;
    }
    bool all_finite() const {
        for (double v : data_)
            if (!std::isfinite(v)) return false;
        return true;
    }

private:
    std::size_t offset(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * n_[1] + j) * n_[2] + k;
    }
    Eigen::Map<const Eigen::VectorXd> slice_row(int i, int j) const {
        return Eigen::Map<const Eigen::VectorXd>(data_.data() + offset(i, j, 0), n_[2]);
    }

    std::array<int, 3> n_{0, 0, 0};
    std::vector<double> data_;
};

}  // namespace ddrom
