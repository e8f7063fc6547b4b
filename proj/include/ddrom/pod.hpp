#pragma once

#include "ddrom/grid.hpp"
#include "ddrom/snapshots.hpp"

#include <string>
#include <vector>

namespace ddrom {

enum class FieldKind { velocity, pressure, eddy_viscosity };

const char* to_string(FieldKind kind);
FieldKind field_kind_from_string(const std::string& name);

/// Rows per node for a field kind: 2 for velocity, 1 otherwise.
int components(FieldKind kind);

/// Quadrature weights matching the stacked layout of a field kind.
Eigen::VectorXd field_weights(const StructuredGrid2D& grid, FieldKind kind);

/// Snapshot matrix (one column per snapshot, nu-major) for one field family.
Eigen::MatrixXd snapshot_matrix(const SnapshotSet& set, FieldKind kind);

/// Weighted-orthonormal modes in the columns of `modes`.
struct PODBasis {
    FieldKind kind = FieldKind::velocity;
    StructuredGrid2D grid{3, 3, 1.0, 1.0};
    Eigen::MatrixXd modes;
    Eigen::VectorXd singular_values;
    Eigen::VectorXd weights;  ///< quadrature weights in the stacked field layout

    int size() const noexcept { return static_cast<int>(modes.cols()); }
    bool empty() const noexcept { return modes.cols() == 0; }
    /// Leading n modes.
    PODBasis truncate(int n) const;
    bool operator==(const PODBasis& other) const;
};

/// Method of snapshots. Columns of S are snapshots, `weights` the diagonal
/// of the quadrature matrix. Retains at most n_max modes (n_max <= 0 keeps
/// every mode above the rank threshold sigma_i/sigma_1 > 1e-12).
PODBasis compute_pod(const StructuredGrid2D& grid, FieldKind kind, const Eigen::MatrixXd& S,
                     int n_max = 0);
PODBasis compute_pod(const SnapshotSet& set, FieldKind kind, int n_max = 0);

/// Square roots of the correlation-matrix eigenvalues, largest first. Cheap
/// diagnostic of the full spectrum; accuracy is limited to ~sqrt(eps)*sigma_1.
Eigen::VectorXd snapshot_spectrum(const Eigen::MatrixXd& S, const Eigen::VectorXd& weights);

Eigen::VectorXd cumulative_energy(const PODBasis& basis);

/// Coefficients (N_T x n) of the snapshots of one viscosity.
struct CoefficientTrajectory {
    double nu = 0.0;
    std::vector<double> times;
    Eigen::MatrixXd coeffs;

    int n_times() const noexcept { return static_cast<int>(coeffs.rows()); }
    int n_modes() const noexcept { return static_cast<int>(coeffs.cols()); }
    Eigen::VectorXd at(int k) const { return coeffs.row(k).transpose(); }
};

Eigen::VectorXd project(const Eigen::Ref<const Eigen::VectorXd>& field, const PODBasis& basis, int n);
std::vector<CoefficientTrajectory> project(const SnapshotSet& set, const PODBasis& basis, int n);
Eigen::VectorXd reconstruct(const Eigen::Ref<const Eigen::VectorXd>& coeffs, const PODBasis& basis);

/// Largest |(m_i, m_j)_w - delta_ij|.
double orthonormality_residual(const PODBasis& basis);

void write_pod(const PODBasis& basis, const std::string& path);
PODBasis read_pod(const std::string& path);

}  // namespace ddrom
