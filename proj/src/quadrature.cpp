// SPDX-License-Identifier: Apache-2.0

#include "qrcs/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace qrcs {

namespace detail {

// Newton iteration on the Legendre recurrence; nodes are symmetric so only
// the lower half is solved. Accurate to ~1e-15 for the orders used here.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights) {
    nodes.assign(static_cast<std::size_t>(n), 0.0);
    weights.assign(static_cast<std::size_t>(n), 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        // one clean-up evaluation of P'_n at the converged node
        {
            double p0 = 1.0;
            double p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[static_cast<std::size_t>(i)] = -x;
        nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        weights[static_cast<std::size_t>(i)] = w;
        weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
}

} // namespace detail

SphereQuadrature::SphereQuadrature(int n_polar, int n_azimuth, SphereDomain domain)
    : n_polar_(n_polar), n_azimuth_(n_azimuth), domain_(domain) {
    if (n_polar < 2 || n_azimuth < 2)
        throw std::invalid_argument("quadrature node counts must be at least 2");

    std::vector<double> x;
    std::vector<double> w;
    detail::gauss_legendre(n_polar, x, w);

    // Affine map of cos(theta') from [-1,1] to the domain interval.
    const double lo = domain == SphereDomain::hemisphere ? 0.0 : -1.0;
    const double hi = 1.0;
    const double scale = 0.5 * (hi - lo);
    const double shift = 0.5 * (hi + lo);

    const double wphi = kTwoPi / n_azimuth;
    nodes_.reserve(static_cast<std::size_t>(n_polar) * static_cast<std::size_t>(n_azimuth));
    for (int i = 0; i < n_polar; ++i) {
        const double ct = scale * x[static_cast<std::size_t>(i)] + shift;
        const double st = std::sqrt(std::max(0.0, 1.0 - ct * ct));
        const double wt = scale * w[static_cast<std::size_t>(i)] * wphi;
        const double theta = std::acos(ct);
        for (int j = 0; j < n_azimuth; ++j) {
            const double phi = (static_cast<double>(j) + 0.5) * kTwoPi / n_azimuth;
            Direction dir(theta, phi);
            nodes_.push_back({dir, {st * std::cos(phi), st * std::sin(phi), ct}, wt});
        }
    }
}

double SphereQuadrature::weight_sum() const {
    double s = 0.0;
    for (const auto& node : nodes_) s += node.weight;
    return s;
}

SphereQuadrature sphere_quadrature(int n_polar, int n_azimuth) {
    return SphereQuadrature(n_polar, n_azimuth, SphereDomain::full_sphere);
}

SphereQuadrature hemisphere_quadrature(int n_polar, int n_azimuth) {
    return SphereQuadrature(n_polar, n_azimuth, SphereDomain::hemisphere);
}

} // namespace qrcs
