// SPDX-License-Identifier: Apache-2.0
//
// report.hpp - CSV and SVG serialization of sweep results.

#pragma once

#include "qrcs/sweep.hpp"

#include <string>

namespace qrcs {

enum class YScale { linear, dbsm };

/// 10*log10(sigma / 1 m^2).
double dbsm(double sigma_m2);

/// Metadata as leading "# key=value" lines, then a header row, then one
/// data row per abscissa. Numbers use 17 significant digits so parsing
/// reproduces them bit-exactly; missing cells are empty; LF endings.
std::string to_csv(const SweepResult& result);

/// Self-contained SVG line chart: one polyline per series, labeled axes,
/// legend. dbsm scaling clips nulls at `dbsm_floor`. Requires >= 2 rows.
std::string to_svg(const SweepResult& result, YScale y_scale,
                   double dbsm_floor = -80.0);

} // namespace qrcs
