// SPDX-License-Identifier: Apache-2.0

#include "qrcs/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace qrcs {

double dbsm(double sigma_m2) { return 10.0 * std::log10(sigma_m2); }

namespace {

std::string num17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string numg(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

} // namespace

std::string to_csv(const SweepResult& result) {
    std::string out;
    for (const auto& [key, value] : result.metadata())
        out += "# " + key + "=" + value + "\n";
    out += result.x_label();
    for (const Series& s : result.series()) out += "," + s.name;
    out += "\n";
    for (std::size_t i = 0; i < result.rows(); ++i) {
        out += num17(result.x()[i]);
        for (const Series& s : result.series()) {
            out += ",";
            if (!is_missing(s.values[i])) out += num17(s.values[i]);
        }
        out += "\n";
    }
    return out;
}

namespace {

constexpr int kWidth = 960;
constexpr int kHeight = 600;
constexpr int kMarginL = 80;
constexpr int kMarginR = 24;
constexpr int kMarginT = 24;
constexpr int kMarginB = 56;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b"};

std::string axis_display(const std::string& x_label) {
    if (x_label == "theta_deg") return "theta [deg]";
    if (x_label == "dim_lambda") return "plate side [lambda]";
    return x_label;
}

std::string y_display(const SweepResult& result, YScale scale) {
    if (scale == YScale::dbsm) return "sigma [dBsm]";
    for (const auto& [key, value] : result.metadata())
        if (key == "units" && value != "m^2") return "value [" + value + "]";
    return "sigma [m^2]";
}

} // namespace

std::string to_svg(const SweepResult& result, YScale y_scale, double dbsm_floor) {
    if (result.rows() < 2)
        throw std::invalid_argument("SVG chart requires at least 2 rows");

    // Collect plotted values (dbsm applied here; nulls clipped at the floor).
    const std::size_t n = result.rows();
    std::vector<std::vector<double>> ys(result.series().size(),
                                        std::vector<double>(n, kMissingCell));
    double ymin = std::numeric_limits<double>::infinity();
    double ymax = -std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < result.series().size(); ++s) {
        for (std::size_t i = 0; i < n; ++i) {
            const double raw = result.series()[s].values[i];
            if (is_missing(raw)) continue;
            double v = raw;
            if (y_scale == YScale::dbsm)
                v = raw > 0.0 ? std::max(dbsm(raw), dbsm_floor) : dbsm_floor;
            ys[s][i] = v;
            ymin = std::min(ymin, v);
            ymax = std::max(ymax, v);
        }
    }
    if (!(ymin <= ymax)) {
        ymin = 0.0;
        ymax = 1.0;
    }
    if (ymin == ymax) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double xmin = result.x().front();
    const double xmax = result.x().back();

    const double plot_w = kWidth - kMarginL - kMarginR;
    const double plot_h = kHeight - kMarginT - kMarginB;
    auto px = [&](double x) { return kMarginL + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) {
        return kMarginT + (ymax - y) / (ymax - ymin) * plot_h;
    };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << " "
        << kHeight << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

    // frame and ticks
    svg << "<g stroke=\"#333\" stroke-width=\"1\" fill=\"none\">\n"
        << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT + plot_h << "\" x2=\""
        << kMarginL + plot_w << "\" y2=\"" << kMarginT + plot_h << "\"/>\n"
        << "<line x1=\"" << kMarginL << "\" y1=\"" << kMarginT << "\" x2=\"" << kMarginL
        << "\" y2=\"" << kMarginT + plot_h << "\"/>\n"
        << "</g>\n";
    svg << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"#333\">\n";
    constexpr int kTicks = 6;
    for (int t = 0; t < kTicks; ++t) {
        const double fx = xmin + (xmax - xmin) * t / (kTicks - 1);
        const double fy = ymin + (ymax - ymin) * t / (kTicks - 1);
        svg << "<text x=\"" << px(fx) << "\" y=\"" << kMarginT + plot_h + 18
            << "\" text-anchor=\"middle\">" << numg(fx) << "</text>\n";
        svg << "<text x=\"" << kMarginL - 8 << "\" y=\"" << py(fy) + 4
            << "\" text-anchor=\"end\">" << numg(fy) << "</text>\n";
    }
    svg << "<text x=\"" << kMarginL + plot_w / 2 << "\" y=\"" << kHeight - 12
        << "\" text-anchor=\"middle\">" << axis_display(result.x_label()) << "</text>\n";
    svg << "<text x=\"16\" y=\"" << kMarginT + plot_h / 2
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
        << kMarginT + plot_h / 2 << ")\">" << y_display(result, y_scale) << "</text>\n";
    svg << "</g>\n";

    // one polyline per series; missing cells are skipped
    for (std::size_t s = 0; s < result.series().size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        svg << "<polyline fill=\"none\" stroke=\"" << color
            << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < n; ++i) {
            if (is_missing(ys[s][i])) continue;
            svg << px(result.x()[i]) << "," << py(ys[s][i]) << " ";
        }
        svg << "\"/>\n";
    }

    // legend
    svg << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t s = 0; s < result.series().size(); ++s) {
        const char* color = kPalette[s % (sizeof(kPalette) / sizeof(kPalette[0]))];
        const double ly = kMarginT + 16.0 + 18.0 * static_cast<double>(s);
        svg << "<line x1=\"" << kMarginL + plot_w - 150 << "\" y1=\"" << ly - 4
            << "\" x2=\"" << kMarginL + plot_w - 120 << "\" y2=\"" << ly - 4
            << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
        svg << "<text x=\"" << kMarginL + plot_w - 112 << "\" y=\"" << ly
            << "\">" << result.series()[s].name << "</text>\n";
    }
    svg << "</g>\n</svg>\n";
    return svg.str();
}

} // namespace qrcs
