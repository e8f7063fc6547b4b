#pragma once

#include <Eigen/Dense>

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace ddrom {

enum class BoundaryTag : std::uint8_t { none = 0, inlet, outlet, bottom, top };

const char* to_string(BoundaryTag tag);

/// Node-centred uniform Cartesian grid on [0, lx] x [0, ly].
///
/// Node (i, j) sits at (i*dx, j*dy) and is stored at linear index j*nx + i.
/// Sides: inlet is x = 0, outlet is x = lx, bottom is y = 0, top is y = ly.
/// Corner nodes are tagged with their x-side (inlet/outlet) but take part in
/// the quadrature of both adjacent sides.
class StructuredGrid2D {
public:
    StructuredGrid2D(int nx, int ny, double lx, double ly);

    int nx() const noexcept { return nx_; }
    int ny() const noexcept { return ny_; }
    double lx() const noexcept { return lx_; }
    double ly() const noexcept { return ly_; }
    double dx() const noexcept { return lx_ / (nx_ - 1); }
    double dy() const noexcept { return ly_ / (ny_ - 1); }
    Eigen::Index size() const noexcept { return Eigen::Index(nx_) * ny_; }

    Eigen::Index index(int i, int j) const noexcept { return Eigen::Index(j) * nx_ + i; }
    double x(int i) const noexcept { return i * dx(); }
    double y(int j) const noexcept { return j * dy(); }

    BoundaryTag tag(int i, int j) const noexcept;

    /// Trapezoidal weights dx*dy*(1, 1/2, 1/4) for interior/edge/corner nodes.
    const Eigen::VectorXd& weights() const noexcept { return weights_; }

    /// Number of nodes along a side and the length of that side.
    int side_nodes(BoundaryTag side) const;
    double side_length(BoundaryTag side) const;
    /// Linear index of the k-th node along a side (k increases with x or y).
    Eigen::Index side_index(BoundaryTag side, int k) const;
    /// 1D trapezoid weight of the k-th node along a side.
    double side_weight(BoundaryTag side, int k) const;
    static std::array<double, 2> outward_normal(BoundaryTag side);

    bool operator==(const StructuredGrid2D& other) const noexcept {
        return nx_ == other.nx_ && ny_ == other.ny_ && lx_ == other.lx_ && ly_ == other.ly_;
    }

private:
    int nx_;
    int ny_;
    double lx_;
    double ly_;
    Eigen::VectorXd weights_;
};

class ScalarField {
public:
    explicit ScalarField(const StructuredGrid2D& grid);
    ScalarField(const StructuredGrid2D& grid, Eigen::VectorXd values);

    const StructuredGrid2D& grid() const noexcept { return grid_; }
    const Eigen::VectorXd& values() const noexcept { return values_; }
    Eigen::VectorXd& values() noexcept { return values_; }

    double operator()(int i, int j) const { return values_[grid_.index(i, j)]; }
    double& operator()(int i, int j) { return values_[grid_.index(i, j)]; }

private:
    StructuredGrid2D grid_;
    Eigen::VectorXd values_;
};

/// Two-component field stored as the u block followed by the v block.
class VectorField2D {
public:
    explicit VectorField2D(const StructuredGrid2D& grid);
    VectorField2D(const StructuredGrid2D& grid, Eigen::VectorXd values);

    const StructuredGrid2D& grid() const noexcept { return grid_; }
    const Eigen::VectorXd& values() const noexcept { return values_; }
    Eigen::VectorXd& values() noexcept { return values_; }

    auto u() const { return values_.head(grid_.size()); }
    auto v() const { return values_.tail(grid_.size()); }
    auto u() { return values_.head(grid_.size()); }
    auto v() { return values_.tail(grid_.size()); }

    ScalarField component(int c) const;

private:
    StructuredGrid2D grid_;
    Eigen::VectorXd values_;
};

ScalarField sample(const StructuredGrid2D& grid, const std::function<double(double, double)>& f);
VectorField2D sample(const StructuredGrid2D& grid,
                     const std::function<std::array<double, 2>(double, double)>& f);

// Second-order finite differences: central in the interior, one-sided at the
// boundary. These work on raw node arrays so assembly code can avoid
// wrapping every intermediate in a field.
Eigen::VectorXd ddx(const StructuredGrid2D& grid, const Eigen::Ref<const Eigen::VectorXd>& f);
Eigen::VectorXd ddy(const StructuredGrid2D& grid, const Eigen::Ref<const Eigen::VectorXd>& f);
Eigen::VectorXd laplace(const StructuredGrid2D& grid, const Eigen::Ref<const Eigen::VectorXd>& f);

VectorField2D gradient(const ScalarField& f);
ScalarField divergence(const VectorField2D& v);
ScalarField laplacian_scalar(const ScalarField& f);
VectorField2D laplacian_vector(const VectorField2D& v);

/// Divergence over the first index of the 2x2 tensor field T(m, c):
/// result_c = sum_m d/dx_m T(m, c). Blocks are indexed tensor[m][c].
VectorField2D tensor_divergence(const StructuredGrid2D& grid,
                                const std::array<std::array<Eigen::VectorXd, 2>, 2>& tensor);

double inner_product(const ScalarField& f, const ScalarField& g);
double inner_product(const VectorField2D& f, const VectorField2D& g);
/// Weighted dot product of raw node arrays (scalar or stacked-vector layout).
double weighted_dot(const StructuredGrid2D& grid, const Eigen::Ref<const Eigen::VectorXd>& f,
                    const Eigen::Ref<const Eigen::VectorXd>& g);

double boundary_inner_product(const ScalarField& f, const ScalarField& g,
                              std::initializer_list<BoundaryTag> sides);
double boundary_inner_product(const ScalarField& f, const ScalarField& g,
                              const std::vector<BoundaryTag>& sides);
double boundary_inner_product(const VectorField2D& f, const VectorField2D& g,
                              const std::vector<BoundaryTag>& sides);

}  // namespace ddrom
