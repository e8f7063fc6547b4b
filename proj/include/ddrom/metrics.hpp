#pragma once

#include "ddrom/pod.hpp"
#include "ddrom/rom.hpp"

#include <string>
#include <vector>

namespace ddrom {

/// Relative error eps(t) of one field for one viscosity and one model.
struct ErrorSeries {
    double nu = 0.0;
    FieldKind field = FieldKind::velocity;
    std::string label;  ///< standard | physics | purely | hybrid | projection | ...
    std::vector<double> times;
    std::vector<double> values;

    /// Throws DataError on negative or non-finite values or length mismatch.
    void validate() const;
};

/// ||approx - truth||_w / ||truth||_w in the grid-weighted L2 norm.
/// Throws DataError when the truth has zero norm.
double relative_l2_error(const Eigen::VectorXd& approx, const Eigen::VectorXd& truth, const Eigen::VectorXd& weights);

/// Error of the reconstructed ROM states against the snapshots of viscosity
/// `nu_index`. States are matched to snapshot times; states between snapshot
/// times are skipped, and a truncated trajectory gives a shorter series.
ErrorSeries error_series(const std::vector<ROMState>& trajectory, const PODBasis& basis, const SnapshotSet& set,
                         int nu_index, const std::string& label);

/// Best-approximation error with the first n modes; needs no ROM solve.
ErrorSeries projection_series(const PODBasis& basis, const SnapshotSet& set, int nu_index, int n);

/// Trapezoidal rule over the series times.
double time_integral(const ErrorSeries& series);

struct ErrorBand {
    ErrorSeries mean;
    std::vector<double> lower;
    std::vector<double> upper;
};

/// Pointwise ensemble statistics of member series on a common time grid;
/// members are cut to the shortest series.
ErrorBand ensemble_error_band(const std::vector<ErrorSeries>& members, bool literal = false);

/// Columns t, then one column per series (label_field_nu). Series may differ
/// in length; missing cells are left empty.
void write_series_csv(const std::vector<ErrorSeries>& series, const std::string& path);
/// gnuplot-friendly whitespace table of one series.
void write_series_dat(const ErrorSeries& series, const std::string& path);

}  // namespace ddrom
