// SPDX-License-Identifier: Apache-2.0
//
// qrcs_main.cpp - command-line front end: cross-section sweeps, chi
// analysis, link budget, and quantum sensitivity limits.
//
// Exit codes: 0 success, 1 computation failure, 2 usage/validation failure.

#include "qrcs/analytic.hpp"
#include "qrcs/link_budget.hpp"
#include "qrcs/numeric.hpp"
#include "qrcs/report.hpp"
#include "qrcs/sweep.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace qrcs;

std::string timestamp_utc(bool deterministic) {
    if (deterministic) return "1970-01-01T00:00:00Z";
    const std::time_t now = std::time(nullptr);
    char buf[32];
    std::tm tm_utc{};
    gmtime_r(&now, &tm_utc);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
    return buf;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out)
        throw std::runtime_error("failed writing output file: " + path);
}

struct EngineFlags {
    int spw = 10;
    int n_polar = 64;
    int n_azimuth = 128;
    std::string den_method = "numeric";
    std::string den_domain = "hemisphere";
    std::size_t cap = kDefaultScattererCap;
    int threads = 1;

    QrcsConfig to_config() const {
        QrcsConfig config;
        config.samples_per_wavelength = spw;
        config.n_polar = n_polar;
        config.n_azimuth = n_azimuth;
        config.denominator_method = den_method == "analytic" ? DenominatorMethod::analytic
                                                             : DenominatorMethod::numeric;
        config.denominator_domain = den_domain == "full"
                                        ? SphereDomain::full_sphere
                                        : SphereDomain::hemisphere;
        config.scatterer_cap = cap;
        config.validate();
        return config;
    }
};

void add_engine_flags(CLI::App* cmd, EngineFlags& flags) {
    cmd->add_option("--spw", flags.spw, "Scatterer samples per wavelength")
        ->check(CLI::Range(2, 1000));
    cmd->add_option("--n-polar", flags.n_polar, "Polar quadrature nodes")
        ->check(CLI::Range(2, 100000));
    cmd->add_option("--n-azimuth", flags.n_azimuth, "Azimuth quadrature nodes")
        ->check(CLI::Range(2, 100000));
    cmd->add_option("--den", flags.den_method,
                    "Denominator integrand: numeric scatterer sum or analytic transform")
        ->check(CLI::IsMember({"numeric", "analytic"}));
    cmd->add_option("--den-domain", flags.den_domain,
                    "Denominator integration domain")
        ->check(CLI::IsMember({"hemisphere", "full"}));
    cmd->add_option("--scatterer-cap", flags.cap, "Maximum scatterer count");
    cmd->add_option("--threads", flags.threads, "Worker threads for sweep rows")
        ->check(CLI::Range(1, 1024));
}

struct SweepFlags {
    double a = 0.0, b = 0.0, lambda = 0.0;
    double theta_start = -90.0, theta_end = 90.0, step = 0.5;
    std::string mode = "both";
    std::string method = "analytic";
    std::string out;
    std::string svg;
    std::string y_scale = "linear";
    double dbsm_floor = -80.0;
    double ratio_floor = 1e-12;
    bool deterministic = false;
    EngineFlags engine;
};

void add_sweep_flags(CLI::App* cmd, SweepFlags& flags, bool fixed_mode) {
    cmd->add_option("--a", flags.a, "Plate width a, meters")->required();
    cmd->add_option("--b", flags.b, "Plate height b, meters")->required();
    cmd->add_option("--lambda", flags.lambda, "Wavelength, meters")->required();
    cmd->add_option("--theta-start", flags.theta_start, "Sweep start, degrees");
    cmd->add_option("--theta-end", flags.theta_end, "Sweep end, degrees");
    cmd->add_option("--step", flags.step, "Sweep step, degrees");
    if (!fixed_mode)
        cmd->add_option("--mode", flags.mode, "Cross-section mode")
            ->check(CLI::IsMember({"quantum", "classical", "both"}));
    cmd->add_option("--method", flags.method, "Evaluation method")
        ->check(CLI::IsMember({"analytic", "numeric", "both"}));
    cmd->add_option("--out", flags.out, "CSV output path")->required();
    cmd->add_option("--svg", flags.svg, "SVG output path");
    cmd->add_option("--y-scale", flags.y_scale, "SVG y axis scale")
        ->check(CLI::IsMember({"linear", "dbsm"}));
    cmd->add_option("--dbsm-floor", flags.dbsm_floor,
                    "Clip floor for nulls on the dBsm scale");
    cmd->add_option("--ratio-floor", flags.ratio_floor,
                    "Classical floor below which the ratio cell is left empty");
    cmd->add_flag("--deterministic", flags.deterministic,
                  "Pin the metadata timestamp for byte-identical output");
    add_engine_flags(cmd, flags.engine);
}

int run_sweep(const SweepFlags& flags) {
    const PlateTarget plate(flags.a, flags.b);
    const Wave wave(flags.lambda);

    SweepOptions options;
    options.modes = flags.mode == "quantum"
                        ? std::set<Mode>{Mode::quantum}
                        : flags.mode == "classical" ? std::set<Mode>{Mode::classical}
                                                    : std::set<Mode>{Mode::quantum, Mode::classical};
    options.methods = flags.method == "analytic"
                          ? std::set<Method>{Method::analytic}
                          : flags.method == "numeric"
                                ? std::set<Method>{Method::numeric}
                                : std::set<Method>{Method::analytic, Method::numeric};
    options.threads = flags.engine.threads;
    options.ratio_floor = flags.ratio_floor;
    options.timestamp = timestamp_utc(flags.deterministic);

    const SweepResult result =
        run_angle_sweep(plate, wave, flags.theta_start, flags.theta_end, flags.step,
                        flags.engine.to_config(), options);

    write_file(flags.out, to_csv(result));
    if (!flags.svg.empty())
        write_file(flags.svg,
                   to_svg(result, flags.y_scale == "dbsm" ? YScale::dbsm : YScale::linear,
                          flags.dbsm_floor));
    return 0;
}

struct ChiFlags {
    double lambda = 0.0;
    double dim_start = 0.0, dim_end = 0.0, dim_step = 0.0;
    std::string out;
    std::string svg;
    bool deterministic = false;
    EngineFlags engine;
};

int run_chi(const ChiFlags& flags) {
    const Wave wave(flags.lambda);
    SweepOptions options;
    options.threads = flags.engine.threads;
    options.timestamp = timestamp_utc(flags.deterministic);

    const SweepResult result = run_chi_sweep(wave, flags.dim_start, flags.dim_end,
                                             flags.dim_step, flags.engine.to_config(),
                                             options);
    write_file(flags.out, to_csv(result));
    if (!flags.svg.empty()) write_file(flags.svg, to_svg(result, YScale::linear));
    return 0;
}

struct LinkFlags {
    double pt = 0.0, ar = 0.0, sigma = 0.0, eps0 = 1.0;
    std::optional<double> range;
    std::optional<double> pr_min;
};

int run_link(const LinkFlags& flags) {
    if (flags.range.has_value() == flags.pr_min.has_value())
        throw std::invalid_argument("exactly one of --range or --pr-min is required");
    if (flags.range) {
        const QuantumLink link(flags.pt, flags.ar, flags.sigma, *flags.range, flags.eps0);
        std::printf("pr_watts=%.6e\n", received_power(link));
    } else {
        const QuantumLink link(flags.pt, flags.ar, flags.sigma, 1.0, flags.eps0);
        std::printf("rmax_meters=%.6f\n", max_range(link, *flags.pr_min));
    }
    return 0;
}

struct LimitsFlags {
    std::optional<long> photons;
    std::optional<int> qi_bits;
    std::optional<double> phase;
    bool qi_linear = false;
};

int run_limits(const LimitsFlags& flags) {
    if (!flags.photons && !flags.qi_bits)
        throw std::invalid_argument("at least one of --photons or --qi-bits is required");
    if (flags.phase && !flags.photons)
        throw std::invalid_argument("--phase requires --photons");
    if (flags.photons) {
        const PhaseLimits limits = phase_limits(*flags.photons);
        std::printf("heisenberg_rad=%g\n", limits.heisenberg);
        std::printf("shot_noise_rad=%g\n", limits.shot_noise);
        if (flags.phase) {
            std::printf("supersensitive=%s\n",
                        is_supersensitive(*flags.phase, *flags.photons) ? "true" : "false");
            std::printf("unphysical=%s\n",
                        is_below_heisenberg(*flags.phase, *flags.photons) ? "true" : "false");
        }
    }
    if (flags.qi_bits)
        std::printf("qi_gain=%g\n",
                    qi_snr_gain(*flags.qi_bits, flags.qi_linear ? QiGainReading::linear
                                                                : QiGainReading::exponential));
    return 0;
}

template <typename F>
int guarded(F&& action) {
    try {
        return action();
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum radar cross section toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Read options from a key=value config file");
    app.get_config_formatter_base()->valueSeparator('=');

    SweepFlags sweep_flags;
    CLI::App* sweep_cmd =
        app.add_subcommand("sweep", "Monostatic cross-section sweep over angle");
    add_sweep_flags(sweep_cmd, sweep_flags, false);

    SweepFlags compare_flags;
    CLI::App* compare_cmd = app.add_subcommand(
        "compare", "Quantum vs classical sweep (sweep with --mode both)");
    add_sweep_flags(compare_cmd, compare_flags, true);

    ChiFlags chi_flags;
    CLI::App* chi_cmd =
        app.add_subcommand("chi", "chi(k,a,b) versus plate side in wavelengths");
    chi_cmd->add_option("--lambda", chi_flags.lambda, "Wavelength, meters")->required();
    chi_cmd->add_option("--dim-start", chi_flags.dim_start, "First side, wavelengths")
        ->required();
    chi_cmd->add_option("--dim-end", chi_flags.dim_end, "Last side, wavelengths")
        ->required();
    chi_cmd->add_option("--dim-step", chi_flags.dim_step, "Side step, wavelengths")
        ->required();
    chi_cmd->add_option("--out", chi_flags.out, "CSV output path")->required();
    chi_cmd->add_option("--svg", chi_flags.svg, "SVG output path");
    chi_cmd->add_flag("--deterministic", chi_flags.deterministic,
                      "Pin the metadata timestamp for byte-identical output");
    add_engine_flags(chi_cmd, chi_flags.engine);

    LinkFlags link_flags;
    CLI::App* link_cmd =
        app.add_subcommand("link", "Quantum radar range equation calculator");
    link_cmd->add_option("--pt", link_flags.pt, "Transmit power, W")->required();
    link_cmd->add_option("--ar", link_flags.ar, "Receive aperture, m^2")->required();
    link_cmd->add_option("--sigma", link_flags.sigma, "Cross section, m^2")->required();
    link_cmd->add_option("--eps0", link_flags.eps0, "Amplitude normalization");
    link_cmd->add_option("--range", link_flags.range, "Range, m (reports received power)");
    link_cmd->add_option("--pr-min", link_flags.pr_min,
                         "Minimum detectable power, W (reports maximum range)");

    LimitsFlags limits_flags;
    CLI::App* limits_cmd =
        app.add_subcommand("limits", "Phase-resolution limits and QI SNR gain");
    limits_cmd->add_option("--photons", limits_flags.photons, "Entangled photon count N");
    limits_cmd->add_option("--phase", limits_flags.phase,
                           "Measured phase resolution, rad");
    limits_cmd->add_option("--qi-bits", limits_flags.qi_bits, "Entanglement bits m");
    limits_cmd->add_flag("--qi-linear", limits_flags.qi_linear,
                         "Read the QI gain as 2*m instead of 2^m");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    if (sweep_cmd->parsed()) return guarded([&] { return run_sweep(sweep_flags); });
    if (compare_cmd->parsed()) {
        compare_flags.mode = "both";
        return guarded([&] { return run_sweep(compare_flags); });
    }
    if (chi_cmd->parsed()) return guarded([&] { return run_chi(chi_flags); });
    if (link_cmd->parsed()) return guarded([&] { return run_link(link_flags); });
    if (limits_cmd->parsed()) return guarded([&] { return run_limits(limits_flags); });
    std::cerr << "error: no subcommand given\n";
    return 2;
}
