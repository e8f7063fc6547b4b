#pragma once

#include "ddrom/pod.hpp"
#include "ddrom/tensor.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ddrom {

/// Weakly imposed Dirichlet velocity U_BC = value * direction on one side.
struct DirichletBoundary {
    BoundaryTag side = BoundaryTag::inlet;
    double value = 0.0;
    std::array<double, 2> direction{1.0, 0.0};
};

struct BoundaryConfig {
    std::vector<DirichletBoundary> dirichlet;
    double tau = 0.0;  ///< penalty weight
    /// Optional boundary field entering L_i = (chi_i, n . R_t) on all four sides.
    /// L is zero when absent.
    std::optional<VectorField2D> boundary_rt;
};

struct MomentumOperators {
    Eigen::MatrixXd M, B, BT;  // r x r
    Tensor3 C;                 // r x r x r
    Eigen::MatrixXd H;         // r x q
    // Penalty data, one entry per Dirichlet side.
    std::vector<Eigen::MatrixXd> E;  // r x r
    std::vector<Eigen::VectorXd> D;  // r
    std::vector<double> u_bc;
    std::vector<double> side_length;
    double tau = 0.0;

    int r() const noexcept { return static_cast<int>(M.rows()); }
    int q() const noexcept { return static_cast<int>(H.cols()); }
};

struct PPEOperators {
    Eigen::MatrixXd D;  // q x q
    Tensor3 G;          // q x r x r
    Eigen::MatrixXd N;  // q x r
    Eigen::VectorXd L;  // q
};

struct TurbulenceTensors {
    Tensor3 CT1, CT2;  // r x nt x r
    Tensor3 CT3, CT4;  // q x nt x r
};

/// Complete reduced operator set at one (r, q, nt). The enriched set of the
/// correction workflow is the same type assembled at (d, h).
struct GalerkinOperators {
    MomentumOperators mom;
    PPEOperators ppe;
    TurbulenceTensors turb;

    int r() const noexcept { return mom.r(); }
    int q() const noexcept { return mom.q(); }
    int nt() const noexcept { return turb.CT1.dim(1); }

    /// Leading sub-blocks at smaller dimensions.
    GalerkinOperators restrict(int r, int q, int nt) const;
    bool all_finite() const;
    bool operator==(const GalerkinOperators& other) const;

    /// || u_r|_Gamma_D - U_BC ||_{L2(Gamma)} from reduced quantities.
    double boundary_mismatch(const Eigen::Ref<const Eigen::VectorXd>& a) const;
};
using EnrichedOperators = GalerkinOperators;

MomentumOperators assemble_momentum(const PODBasis& basis_u, const PODBasis& basis_p, const BoundaryConfig& bc,
                                    int r, int q);
PPEOperators assemble_ppe(const PODBasis& basis_u, const PODBasis& basis_p, const BoundaryConfig& bc, int r,
                          int q);
TurbulenceTensors assemble_turbulence(const PODBasis& basis_u, const PODBasis& basis_p,
                                      const PODBasis& basis_nut, int r, int q, int nt);

/// Full set at (r, q, nt). nt = 0 (or an empty eddy-viscosity basis) gives
/// zero-width turbulence tensors.
GalerkinOperators assemble_operators(const PODBasis& basis_u, const PODBasis& basis_p,
                                     const PODBasis* basis_nut, const BoundaryConfig& bc, int r, int q,
                                     int nt);
/// Same as assemble_operators, with the rank checks of the enrichment step.
EnrichedOperators assemble_enriched(const PODBasis& basis_u, const PODBasis& basis_p,
                                    const PODBasis* basis_nut, const BoundaryConfig& bc, int d, int h,
                                    int nt);

/// Scalar n x grad(chi) = n_x d_y chi - n_y d_x chi along one side (one value per side node).
Eigen::VectorXd tangential_gradient(const StructuredGrid2D& grid, const Eigen::Ref<const Eigen::VectorXd>& chi,
                                    BoundaryTag side);

void write_operators(const GalerkinOperators& ops, const std::string& path);
GalerkinOperators read_operators(const std::string& path);

}  // namespace ddrom
