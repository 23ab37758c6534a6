// SPDX-License-Identifier: Apache-2.0

#include "qrcs/sweep.hpp"

#include "qrcs/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <stdexcept>
#include <thread>

namespace qrcs {

SweepResult::SweepResult(std::string x_label, std::vector<double> x,
                         std::vector<Series> series,
                         std::vector<std::pair<std::string, std::string>> metadata)
    : x_label_(std::move(x_label)), x_(std::move(x)), series_(std::move(series)),
      metadata_(std::move(metadata)) {
    if (x_label_.empty())
        throw std::invalid_argument("x label must be nonempty");
    if (x_.empty())
        throw std::invalid_argument("sweep result must have at least one row");
    for (std::size_t i = 1; i < x_.size(); ++i)
        if (!(x_[i] > x_[i - 1]))
            throw std::invalid_argument("sweep abscissae must be strictly increasing");
    if (series_.empty())
        throw std::invalid_argument("sweep result must have at least one series");
    for (const Series& s : series_) {
        if (s.name.empty())
            throw std::invalid_argument("series name must be nonempty");
        if (s.values.size() != x_.size())
            throw std::invalid_argument("series length must match the abscissae");
    }
}

const Series* SweepResult::find_series(const std::string& name) const {
    for (const Series& s : series_)
        if (s.name == name) return &s;
    return nullptr;
}

namespace {

std::vector<double> sample_range(double start, double end, double step,
                                 const char* what) {
    if (!(step > 0.0))
        throw std::invalid_argument(std::string(what) + ": step must be positive");
    if (start > end)
        throw std::invalid_argument(std::string(what) + ": empty sweep range");
    std::vector<double> xs;
    const auto n = static_cast<std::size_t>(std::floor((end - start) / step + 1e-9)) + 1;
    xs.reserve(n);
    for (std::size_t i = 0; i < n; ++i) xs.push_back(start + static_cast<double>(i) * step);
    return xs;
}

std::string format_dim(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

// FNV-1a over a canonical engine-parameter string; identifies the exact
// configuration a result was produced with.
std::string config_fingerprint(const std::string& canonical) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : canonical) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string canonical_config(const QrcsConfig& config) {
    return "spw=" + std::to_string(config.samples_per_wavelength) +
           ";np=" + std::to_string(config.n_polar) +
           ";na=" + std::to_string(config.n_azimuth) +
           ";den=" + (config.denominator_method == DenominatorMethod::numeric ? "n" : "a") +
           ";dom=" + (config.denominator_domain == SphereDomain::hemisphere ? "h" : "f") +
           ";cap=" + std::to_string(config.scatterer_cap);
}

// Static row partition across threads; each row is computed independently,
// so the parallel result is bitwise identical to the serial one.
template <typename RowFn>
void for_each_row(std::size_t rows, int threads, RowFn&& fn) {
    const int n_threads =
        std::max(1, std::min<int>(threads, static_cast<int>(rows)));
    if (n_threads == 1) {
        for (std::size_t i = 0; i < rows; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_threads));
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&fn, t, n_threads, rows] {
            for (std::size_t i = static_cast<std::size_t>(t); i < rows;
                 i += static_cast<std::size_t>(n_threads))
                fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace

SweepResult run_angle_sweep(const PlateTarget& plate, const Wave& wave,
                            double theta_start_deg, double theta_end_deg,
                            double step_deg, const QrcsConfig& config,
                            const SweepOptions& options) {
    if (theta_start_deg < -90.0 || theta_end_deg > 90.0)
        throw std::invalid_argument("angle sweep must stay within [-90, 90] degrees");
    if (options.modes.empty() || options.methods.empty())
        throw std::invalid_argument("at least one mode and one method are required");

    const std::vector<double> angles_deg =
        sample_range(theta_start_deg, theta_end_deg, step_deg, "angle sweep");

    struct Column {
        Mode mode;
        Method method;
        std::string name;
    };
    std::vector<Column> columns;
    for (Method method : {Method::analytic, Method::numeric}) {
        if (!options.methods.count(method)) continue;
        for (Mode mode : {Mode::quantum, Mode::classical}) {
            if (!options.modes.count(mode)) continue;
            if (mode == Mode::classical && method == Method::numeric)
                continue; // no numeric classical engine
            columns.push_back({mode, method,
                               std::string(mode == Mode::quantum ? "qrcs" : "crcs") + "_" +
                                   to_string(method)});
        }
    }
    if (columns.empty())
        throw std::invalid_argument(
            "no computable mode/method combination: classical cross sections are analytic only");

    const bool needs_numeric = options.methods.count(Method::numeric) &&
                               options.modes.count(Mode::quantum);
    std::unique_ptr<QrcsEngine> engine;
    if (needs_numeric)
        engine = std::make_unique<QrcsEngine>(plate, wave, config);

    std::vector<Series> series;
    for (const Column& c : columns) series.push_back({c.name, std::vector<double>(angles_deg.size())});

    for_each_row(angles_deg.size(), needs_numeric ? options.threads : 1, [&](std::size_t i) {
        const double theta = angles_deg[i] * kPi / 180.0;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            double v = 0.0;
            if (columns[c].method == Method::analytic)
                v = columns[c].mode == Mode::quantum
                        ? qrcs_plate_highfreq(plate, wave, theta).value
                        : crcs_plate(plate, wave, theta).value;
            else
                v = engine->monostatic(theta).value;
            series[c].values[i] = v;
        }
    });

    // quantum/classical ratio from the analytic pair when both are present
    const Series* q = nullptr;
    const Series* cl = nullptr;
    for (const auto& s : series) {
        if (s.name == "qrcs_analytic") q = &s;
        if (s.name == "crcs_analytic") cl = &s;
    }
    if (q && cl) {
        Series ratio{"ratio", std::vector<double>(angles_deg.size(), kMissingCell)};
        for (std::size_t i = 0; i < angles_deg.size(); ++i)
            if (cl->values[i] > options.ratio_floor)
                ratio.values[i] = q->values[i] / cl->values[i];
        series.push_back(std::move(ratio));
    }

    std::string method_list;
    for (Method method : {Method::analytic, Method::numeric})
        if (options.methods.count(method))
            method_list += (method_list.empty() ? "" : ",") + std::string(to_string(method));
    std::string mode_list;
    for (Mode mode : {Mode::quantum, Mode::classical})
        if (options.modes.count(mode))
            mode_list += (mode_list.empty() ? "" : ",") + std::string(to_string(mode));

    std::vector<std::pair<std::string, std::string>> metadata = {
        {"tool", "qrcs"},
        {"sweep", "angle"},
        {"plate_a_m", format_dim(plate.width_a())},
        {"plate_b_m", format_dim(plate.height_b())},
        {"wavelength_m", format_dim(wave.wavelength())},
        {"modes", mode_list},
        {"methods", method_list},
        {"units", "m^2"},
    };
    if (needs_numeric) {
        metadata.emplace_back("samples_per_wavelength",
                              std::to_string(config.samples_per_wavelength));
        metadata.emplace_back("quadrature", std::to_string(config.n_polar) + "x" +
                                                std::to_string(config.n_azimuth));
        metadata.emplace_back("denominator_method",
                              config.denominator_method == DenominatorMethod::numeric
                                  ? "numeric"
                                  : "analytic");
    }
    metadata.emplace_back(
        "config_fingerprint",
        config_fingerprint(canonical_config(config) + ";a=" + format_dim(plate.width_a()) +
                           ";b=" + format_dim(plate.height_b()) +
                           ";lambda=" + format_dim(wave.wavelength())));
    if (!options.timestamp.empty())
        metadata.emplace_back("generated", options.timestamp);

    return SweepResult("theta_deg", angles_deg, std::move(series), std::move(metadata));
}

SweepResult run_chi_sweep(const Wave& wave, double dim_start, double dim_end,
                          double dim_step, const QrcsConfig& config,
                          const SweepOptions& options) {
    if (!(dim_start > 0.0))
        throw std::invalid_argument("chi sweep: dimensions must be positive");
    const std::vector<double> dims = sample_range(dim_start, dim_end, dim_step, "chi sweep");

    std::vector<double> chis(dims.size());
    for_each_row(dims.size(), options.threads, [&](std::size_t i) {
        const double side = dims[i] * wave.wavelength();
        chis[i] = chi_factor(PlateTarget(side, side), wave, config);
    });

    std::vector<std::pair<std::string, std::string>> metadata = {
        {"tool", "qrcs"},
        {"sweep", "chi"},
        {"wavelength_m", format_dim(wave.wavelength())},
        {"samples_per_wavelength", std::to_string(config.samples_per_wavelength)},
        {"quadrature",
         std::to_string(config.n_polar) + "x" + std::to_string(config.n_azimuth)},
        {"denominator_method",
         config.denominator_method == DenominatorMethod::numeric ? "numeric" : "analytic"},
        {"units", "dimensionless"},
        {"config_fingerprint",
         config_fingerprint(canonical_config(config) + ";lambda=" +
                            format_dim(wave.wavelength()))},
    };
    if (!options.timestamp.empty())
        metadata.emplace_back("generated", options.timestamp);

    return SweepResult("dim_lambda", dims, {{"chi", std::move(chis)}},
                       std::move(metadata));
}

} // namespace qrcs
