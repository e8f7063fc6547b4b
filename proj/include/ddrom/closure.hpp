#pragma once

#include "ddrom/pod.hpp"
#include "ddrom/rom.hpp"
#include "ddrom/scaler.hpp"

#include <string>
#include <vector>

namespace ddrom {

struct ReducedBases {
    PODBasis velocity;
    PODBasis pressure;
    PODBasis eddy_viscosity;  ///< may be empty
};

struct CorrectionFlags {
    bool include_turbulence = true;
    /// Full right-hand side for the operator pair; false keeps only aCa / aGa.
    bool full_operator_set = true;
    /// tau = -(M da/dt + C_r(a_r)) with the solver's discrete time derivative, so
    /// projected coefficients solve the corrected r-dimensional equations.
    /// Implies the full operator set.
    bool data_consistent = false;
};

struct CorrectionRecord {
    double nu = 0.0;
    double t = 0.0;
    Eigen::VectorXd a;    ///< projected velocity coefficients (r)
    Eigen::VectorXd b;    ///< projected pressure coefficients (q)
    Eigen::VectorXd g;    ///< projected eddy-viscosity coefficients (nt), may be empty
    Eigen::VectorXd tau;  ///< (tau_u, tau_p), may be empty for g datasets
};

enum class DatasetTarget { tau, g };

/// Which quantities feed a regression input vector, in the order a, b, g, nu, t.
struct InputSelection {
    bool a = true;
    bool b = true;
    bool g = false;
    bool nu = true;
    bool t = true;
};

struct CorrectionDataset {
    int r = 0;
    int q = 0;
    int nt = 0;
    std::vector<CorrectionRecord> records;
    Scaler input_scaler;   ///< over the columns of inputs(all)
    Scaler target_scaler;  ///< over the tau columns

    int size() const { return static_cast<int>(records.size()); }
    bool has_tau() const { return !records.empty() && records.front().tau.size() > 0; }
    /// Throws DataError on ragged records, non-finite values or bad ordering.
    void validate() const;
    std::vector<double> nus() const;
    /// Records of one viscosity in time order.
    std::vector<const CorrectionRecord*> block(double nu) const;
    /// Rows are samples.
    Eigen::MatrixXd inputs(const InputSelection& sel) const;
    Eigen::MatrixXd targets(DatasetTarget which = DatasetTarget::tau) const;
    /// Fits both scalers from the current records.
    void fit_scalers();
};

int input_width(const InputSelection& sel, int r, int q, int nt);
Eigen::VectorXd assemble_input(const InputSelection& sel, const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                               const Eigen::VectorXd& g, double nu, double t);

/// Correction for one state: filter_{r+q}[C_dh(a_d, b_h, g)] - C_rq(a_r, b_q, g).
Eigen::VectorXd exact_correction(const GalerkinOperators& ops_rq, const GalerkinOperators& ops_dh,
                                 const Eigen::VectorXd& a_d, const Eigen::VectorXd& b_h, const Eigen::VectorXd& g,
                                 double nu, const CorrectionFlags& flags);

/// Exact corrections at every snapshot of `set`. Snapshots are projected on
/// d = ops_dh.r() velocity and h = ops_dh.q() pressure modes.
CorrectionDataset compute_exact_corrections(const SnapshotSet& set, const ReducedBases& bases,
                                            const GalerkinOperators& ops_rq, const GalerkinOperators& ops_dh,
                                            const CorrectionFlags& flags = {});

/// (a_r, b_q, nu, t) -> g^proj records; tau stays empty.
CorrectionDataset build_g_dataset(const SnapshotSet& set, const ReducedBases& bases, int r, int q, int nt);

/// tau(x) = A x + x^T B x with x = (a, b); B symmetric in its last two indices.
struct QuadraticAnsatz {
    Eigen::MatrixXd A;
    Tensor3 B;
    int rank = 0;
    int n_features = 0;
    bool rank_deficient = false;
    Eigen::VectorXd residual_rms;  ///< per output row

    int dim() const { return static_cast<int>(A.rows()); }
};

/// Row-wise linear least squares on the monomials [x, x_j x_k (j <= k)].
/// Rows of X are states, rows of Y targets. Rank-deficient systems take the
/// minimum-norm solution and set rank_deficient.
QuadraticAnsatz fit_quadratic_ansatz(const Eigen::MatrixXd& X, const Eigen::MatrixXd& Y);
QuadraticAnsatz fit_quadratic_ansatz(const CorrectionDataset& dataset);
Eigen::VectorXd evaluate_ansatz(const QuadraticAnsatz& model, const Eigen::VectorXd& a, const Eigen::VectorXd& b);

/// Closure that returns the stored values for `nu` at the requested time.
/// Throws DataError during the solve when a time is not tabulated.
ClosureFn tabulated_closure(const CorrectionDataset& dataset, double nu, DatasetTarget which);
ClosureFn ansatz_closure(const QuadraticAnsatz& model);

/// CSV with a header naming every column plus `<path>.scaler.json`.
void write_dataset(const CorrectionDataset& dataset, const std::string& path);
CorrectionDataset read_dataset(const std::string& path);

}  // namespace ddrom
