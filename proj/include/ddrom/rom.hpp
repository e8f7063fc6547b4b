#pragma once

#include "ddrom/galerkin.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ddrom {

struct ROMState {
    double t = 0.0;
    Eigen::VectorXd a;
    Eigen::VectorXd b;
};

enum class ClosureMode { standard, physics, purely, hybrid };
const char* to_string(ClosureMode mode);
ClosureMode closure_mode_from_string(const std::string& name);

/// What a closure sees when it is evaluated for step `step` (time t).
/// `a`, `b` hold the extrapolated predictor state; `history` the converged
/// states so far, starting with the initial state.
struct ClosureContext {
    double t;
    double nu;
    int step;
    const Eigen::VectorXd& a;
    const Eigen::VectorXd& b;
    const std::vector<ROMState>& history;
};
using ClosureFn = std::function<Eigen::VectorXd(const ClosureContext&)>;

struct ClosureHooks {
    ClosureMode mode = ClosureMode::standard;
    ClosureFn g_model;    ///< reduced eddy-viscosity coefficients, length nt
    ClosureFn tau_model;  ///< correction (tau_u, tau_p), length r + q

    /// Throws ConfigError when a required model is missing.
    void validate() const;
    bool uses_g() const { return mode == ClosureMode::physics || mode == ClosureMode::hybrid; }
    bool uses_tau() const { return mode == ClosureMode::purely || mode == ClosureMode::hybrid; }
};

struct SolverConfig {
    double nu = 1e-3;
    double dt = 1e-3;
    double t_end = 1.0;
    double newton_tol = 1e-10;
    int newton_max_iter = 50;
    /// Blow-up when ||a|| exceeds this factor times max(1, ||a(t0)||).
    double blowup_factor = 1e4;
    /// Newton matrices above this 2-norm condition number are flagged.
    double condition_threshold = 1e10;
    bool correct_initial_pressure = true;

    void validate() const;
};

/// Closure values entering one residual evaluation (empty vectors mean absent).
struct ClosureTerms {
    Eigen::VectorXd g;
    Eigen::VectorXd tau;
};

/// Which reduced right-hand side terms an operator evaluation includes.
struct OperatorSelection {
    bool full = true;        ///< false: nonlinear convection pair only
    bool turbulence = true;  ///< include the g-dependent tensors when g is given
};

/// Reduced right-hand side C(a, b, g) without the time derivative, stacked
/// (momentum rows, PPE rows).
Eigen::VectorXd reduced_operator(const GalerkinOperators& ops, const Eigen::VectorXd& a, const Eigen::VectorXd& b,
                                 const Eigen::VectorXd& g, double nu, OperatorSelection sel = {});

/// Residual of the reduced system at `state`. BDF2 when prev2 is given,
/// implicit Euler otherwise.
Eigen::VectorXd residual(const ROMState& state, const ROMState& prev, const ROMState* prev2,
                         const GalerkinOperators& ops, const ClosureTerms& closure, double nu, double dt);
Eigen::MatrixXd residual_jacobian(const ROMState& state, const ROMState* prev2, const GalerkinOperators& ops,
                                  const ClosureTerms& closure, double nu, double dt);

enum class SolveStatus { completed, blow_up, step_failure };
const char* to_string(SolveStatus status);

struct SolveResult {
    SolveStatus status = SolveStatus::completed;
    std::vector<ROMState> states;  ///< converged states, initial state first
    std::vector<int> newton_iters;
    std::vector<double> residual_norms;
    std::vector<std::vector<double>> newton_history;  ///< per-step residual norms
    int failed_step = -1;
    double failed_time = 0.0;
    std::string message;
    double max_condition = 0.0;
    bool ill_conditioned = false;

    const ROMState& last() const { return states.back(); }
};

SolveResult solve(const ROMState& initial, const GalerkinOperators& ops, const ClosureHooks& hooks,
                  const SolverConfig& config);

struct PenaltySweepRow {
    double tau;
    double mismatch;
    SolveStatus status;
    double condition;
    bool ill_conditioned;
};

/// Boundary mismatch at the final time for each penalty weight.
std::vector<PenaltySweepRow> sweep_penalty(const ROMState& initial, const GalerkinOperators& ops,
                                           const ClosureHooks& hooks, const SolverConfig& config,
                                           const std::vector<double>& taus);

/// Trajectory CSV: t, a_1..a_r, b_1..b_q, newton_iters, residual_norm.
void write_trajectory_csv(const SolveResult& result, const std::string& path);
/// JSON diagnostic sidecar for runs that did not complete.
void write_diagnostic_json(const SolveResult& result, const std::string& path);
/// Reads t, a, b columns back from a trajectory CSV.
std::vector<ROMState> read_trajectory_csv(const std::string& path, int r, int q);

}  // namespace ddrom
