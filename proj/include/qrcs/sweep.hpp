// SPDX-License-Identifier: Apache-2.0
//
// sweep.hpp - angle and dimension sweeps over the analytic and numeric
// engines, collected into a serializable result table.

#pragma once

#include "qrcs/numeric.hpp"

#include <cmath>
#include <limits>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace qrcs {

/// Missing table cells (e.g. the ratio where the classical value is below
/// the floor) are carried as quiet NaN and serialized as empty.
inline constexpr double kMissingCell = std::numeric_limits<double>::quiet_NaN();

inline bool is_missing(double v) { return std::isnan(v); }

struct Series {
    std::string name;
    std::vector<double> values;
};

/// An x-indexed table of named series plus "# key=value" metadata.
/// Angle sweeps use degrees on the x axis; chi sweeps use plate side in
/// wavelengths.
class SweepResult {
public:
    SweepResult(std::string x_label, std::vector<double> x,
                std::vector<Series> series,
                std::vector<std::pair<std::string, std::string>> metadata);

    const std::string& x_label() const { return x_label_; }
    const std::vector<double>& x() const { return x_; }
    const std::vector<Series>& series() const { return series_; }
    const std::vector<std::pair<std::string, std::string>>& metadata() const {
        return metadata_;
    }
    std::size_t rows() const { return x_.size(); }

    const Series* find_series(const std::string& name) const;

private:
    std::string x_label_;
    std::vector<double> x_;
    std::vector<Series> series_;
    std::vector<std::pair<std::string, std::string>> metadata_;
};

struct SweepOptions {
    std::set<Mode> modes{Mode::quantum, Mode::classical};
    std::set<Method> methods{Method::analytic};
    int threads = 1;
    double ratio_floor = 1e-12;   // m^2; classical below this leaves the ratio empty
    std::string timestamp;        // empty -> caller-side "now"; pinned for determinism
};

/// One row per angle (degrees); one column per requested (mode, method)
/// pair, named like "qrcs_analytic". When both modes are present for a
/// method, a quantum/classical "ratio" column is appended. The classical
/// numeric combination has no engine and is skipped.
SweepResult run_angle_sweep(const PlateTarget& plate, const Wave& wave,
                            double theta_start_deg, double theta_end_deg,
                            double step_deg, const QrcsConfig& config,
                            const SweepOptions& options = {});

/// chi(k,a,b) for square plates with side swept in multiples of the
/// wavelength. Columns: x = side in wavelengths, series "chi".
SweepResult run_chi_sweep(const Wave& wave, double dim_start, double dim_end,
                          double dim_step, const QrcsConfig& config,
                          const SweepOptions& options = {});

} // namespace qrcs
