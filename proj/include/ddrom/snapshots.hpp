#pragma once

#include "ddrom/grid.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ddrom {

/// Offline/online time windows and viscosity sets of an experiment.
struct ParameterGrid {
    double t0 = 0.0;
    double t1 = 1.0;  ///< end of the offline window
    double t2 = 1.0;  ///< end of the online window
    double dt_offline = 0.01;
    double dt_online = 0.01;
    std::vector<double> nu_train;
    std::vector<double> nu_test;

    /// Throws ConfigError when an invariant is violated.
    void validate() const;
    int offline_steps() const;  ///< number of snapshot times in [t0, t1]
    int online_steps() const;   ///< number of snapshot times in [t0, t2] at dt_offline
};

struct FieldSnapshot {
    double t;
    double nu;
    VectorField2D u;
    ScalarField p;
    ScalarField nu_t;
};

/// Snapshots ordered nu-major: index = m * n_times + k for viscosity m, time k.
class SnapshotSet {
public:
    SnapshotSet(const StructuredGrid2D& grid, int n_times, int n_nus, double dt, double t0,
                std::vector<FieldSnapshot> snapshots);

    const StructuredGrid2D& grid() const noexcept { return grid_; }
    int n_times() const noexcept { return n_times_; }
    int n_nus() const noexcept { return n_nus_; }
    int size() const noexcept { return static_cast<int>(snapshots_.size()); }
    double dt() const noexcept { return dt_; }
    double t0() const noexcept { return t0_; }

    const FieldSnapshot& operator[](int k) const { return snapshots_.at(k); }
    const FieldSnapshot& at(int nu_index, int time_index) const {
        return snapshots_.at(nu_index * n_times_ + time_index);
    }
    const std::vector<FieldSnapshot>& snapshots() const noexcept { return snapshots_; }
    std::vector<double> nus() const;
    std::vector<double> times() const;

    Eigen::MatrixXd velocity_matrix() const;
    Eigen::MatrixXd pressure_matrix() const;
    Eigen::MatrixXd eddy_viscosity_matrix() const;

    bool operator==(const SnapshotSet& other) const;

private:
    StructuredGrid2D grid_;
    int n_times_;
    int n_nus_;
    double dt_;
    double t0_;
    std::vector<FieldSnapshot> snapshots_;
};

enum class SampleWindow {
    offline,  ///< [t0, t1] x nu_train
    online    ///< [t0, t2] x nu_test, sampled at dt_offline
};

struct SmagorinskyConfig {
    double cs = 0.17;
    double delta = 0.0;  ///< filter width; <= 0 selects sqrt(dx*dy)
};

/// Travelling two-harmonic surrogate of a periodic wake:
///   u = U_inf - D(nu) gD(y) + sum_m A_m(nu) sin(m theta) g(y)
///   v = sum_m beta A_m(nu) cos(m theta) g(y)
///   p = -sum_m A_m(nu) cos(m theta) g(y)
/// with theta = k x - Omega(nu) t and Gaussian envelopes g, gD centred on y_center.
struct WakeConfig {
    double u_inf = 1.0;
    double wavenumber = 2.0 * 3.14159265358979323846;
    double omega0 = 2.0 * 3.14159265358979323846;
    double nu_ref = 1e-4;
    double omega_exponent = 0.0;  ///< Omega(nu) = omega0 (nu_ref / nu)^omega_exponent
    double amp1 = 0.3;
    double amp2 = 0.0;
    double amp_exponent = 0.0;  ///< A_m(nu) = amp_m (nu_ref / nu)^amp_exponent
    double beta = 0.5;
    double y_center = 0.5;
    double width = 0.15;
    double deficit = 0.0;
    double deficit_exponent = 0.0;  ///< D(nu) = deficit (nu_ref / nu)^deficit_exponent
    double deficit_width = 0.25;

    void validate() const;
    double omega(double nu) const;
    double amplitude(int harmonic, double nu) const;
    double deficit_amplitude(double nu) const;
};

/// Taylor-Green vortex on the unit square; exact Navier-Stokes solution.
SnapshotSet generate_taylor_green(const StructuredGrid2D& grid, const ParameterGrid& params,
                                  SampleWindow window = SampleWindow::offline,
                                  const SmagorinskyConfig& smag = {});

/// Closed-form Taylor-Green fields at one (t, nu).
FieldSnapshot taylor_green_snapshot(const StructuredGrid2D& grid, double t, double nu,
                                    const SmagorinskyConfig& smag = {});

SnapshotSet generate_synthetic_wake(const StructuredGrid2D& grid, const ParameterGrid& params,
                                    const WakeConfig& wake, SampleWindow window = SampleWindow::offline,
                                    const SmagorinskyConfig& smag = {});

FieldSnapshot wake_snapshot(const StructuredGrid2D& grid, double t, double nu, const WakeConfig& wake,
                            const SmagorinskyConfig& smag = {});

/// Smagorinsky surrogate nu_t = (cs*delta)^2 sqrt(2 E_ij E_ij).
ScalarField compute_eddy_viscosity(const VectorField2D& u, double cs, double delta);

void write_snapshots(const SnapshotSet& set, const std::string& path);
/// Throws FormatError (with byte offset) on malformed or truncated files and
/// when the stored grid differs from `expected`.
SnapshotSet read_snapshots(const std::string& path,
                           const std::optional<StructuredGrid2D>& expected = std::nullopt);

}  // namespace ddrom
