// SPDX-License-Identifier: Apache-2.0

#include "qrcs/numeric.hpp"

#include "qrcs/analytic.hpp"
#include "qrcs/stable_sum.hpp"

#include <cmath>
#include <stdexcept>

namespace qrcs {

void QrcsConfig::validate() const {
    if (samples_per_wavelength < 2)
        throw std::invalid_argument("samples_per_wavelength must be at least 2");
    if (n_polar < 2 || n_azimuth < 2)
        throw std::invalid_argument("quadrature node counts must be at least 2");
    if (scatterer_cap < 1)
        throw std::invalid_argument("scatterer_cap must be positive");
    if (!(denominator_floor > 0.0))
        throw std::invalid_argument("denominator_floor must be positive");
}

namespace {

struct Phasor {
    double re;
    double im;
};

// Compensated coherent sum of exp(i*q*x) over one lattice axis.
Phasor axis_sum(std::span<const double> xs, double q) {
    StableSum re;
    StableSum im;
    for (double x : xs) {
        const double arg = q * x;
        re.add(std::cos(arg));
        im.add(std::sin(arg));
    }
    return {re.value(), im.value()};
}

} // namespace

double interference_intensity(const ScattererGrid& grid, const Vec3& q) {
    // Scatterers live in the plate plane, so only the in-plane components
    // of q carry phase.
    if (grid.is_lattice()) {
        const Phasor sx = axis_sum(grid.axis_x(), q.x);
        const Phasor sy = axis_sum(grid.axis_y(), q.y);
        const double re = sx.re * sy.re - sx.im * sy.im;
        const double im = sx.re * sy.im + sx.im * sy.re;
        const double ds = grid.cell_area();
        return ds * ds * (re * re + im * im);
    }
    StableSum re;
    StableSum im;
    for (const Vec2& p : grid.positions()) {
        const double arg = q.x * p.x + q.y * p.y;
        re.add(std::cos(arg));
        im.add(std::sin(arg));
    }
    const double ds = grid.cell_area();
    const double r = re.value();
    const double i = im.value();
    return ds * ds * (r * r + i * i);
}

QrcsEngine::QrcsEngine(const PlateTarget& plate, const Wave& wave,
                       const QrcsConfig& config)
    : plate_(plate), wave_(wave), config_(config),
      grid_((config.validate(),
             make_grid(plate, wave, config.samples_per_wavelength, config.scatterer_cap))),
      quad_(config.n_polar, config.n_azimuth, config.denominator_domain) {}

double QrcsEngine::denominator(const Direction& incident) const {
    const double k = wave_.wavenumber();
    const Vec3 ui = incident.unit();
    StableSum acc;
    if (config_.denominator_method == DenominatorMethod::numeric) {
        for (const auto& node : quad_.nodes()) {
            const Vec3 q{k * (ui.x - node.unit.x), k * (ui.y - node.unit.y),
                         k * (ui.z - node.unit.z)};
            acc.add(node.weight * interference_intensity(grid_, q));
        }
    } else {
        for (const auto& node : quad_.nodes()) {
            const double f = aperture_transform_rect(plate_, k * (ui.x - node.unit.x),
                                                     k * (ui.y - node.unit.y));
            acc.add(node.weight * f * f);
        }
    }
    const double d = acc.value();
    if (!(d > config_.denominator_floor))
        throw std::runtime_error("denominator underflow: quadrature far too coarse "
                                 "for this target");
    return d;
}

CrossSection QrcsEngine::evaluate(const Direction& incident,
                                  const Direction& detected) const {
    const double numerator =
        interference_intensity(grid_, scattering_vector(wave_, incident, detected));
    const double value = kFourPi * projected_area(plate_, incident.theta()) * numerator /
                         denominator(incident);
    return CrossSection(value, Mode::quantum, Method::numeric);
}

CrossSection QrcsEngine::full(const Direction& incident, const Direction& detected) const {
    if (!(incident.unit().z < 0.0))
        throw std::invalid_argument(
            "incident direction must point toward the plate (negative z component)");
    return evaluate(incident, detected);
}

CrossSection QrcsEngine::monostatic(double theta) const {
    if (!(std::abs(theta) <= kPi / 2.0))
        throw std::invalid_argument("monostatic angle must lie in [-pi/2, pi/2]");
    // Line of sight at polar angle theta in the phi = 0 plane; the incident
    // photon propagates opposite to it and the detector looks back along it.
    // The grazing boundary is admitted here (the projected area zeroes it).
    const Direction line_of_sight(std::abs(theta), theta < 0.0 ? kPi : 0.0);
    return evaluate(line_of_sight.reversed(), line_of_sight);
}

double QrcsEngine::chi() const {
    const double lambda = wave_.wavelength();
    const Direction normal_incidence(kPi, 0.0);
    return lambda * lambda * plate_.area() / denominator(normal_incidence);
}

double QrcsEngine::scattered_integral(const Direction& incident,
                                      const SphereQuadrature& outer) const {
    if (!(incident.unit().z < 0.0))
        throw std::invalid_argument(
            "incident direction must point toward the plate (negative z component)");
    const double k = wave_.wavenumber();
    const Vec3 ui = incident.unit();
    StableSum acc;
    for (const auto& node : outer.nodes()) {
        const Vec3 q{k * (ui.x - node.unit.x), k * (ui.y - node.unit.y),
                     k * (ui.z - node.unit.z)};
        acc.add(node.weight * interference_intensity(grid_, q));
    }
    return kFourPi * projected_area(plate_, incident.theta()) * acc.value() /
           denominator(incident);
}

CrossSection qrcs_full(const PlateTarget& plate, const Wave& wave,
                       const Direction& incident, const Direction& detected,
                       const QrcsConfig& config) {
    return QrcsEngine(plate, wave, config).full(incident, detected);
}

CrossSection qrcs_monostatic(const PlateTarget& plate, const Wave& wave,
                             double theta, const QrcsConfig& config) {
    return QrcsEngine(plate, wave, config).monostatic(theta);
}

double chi_factor(const PlateTarget& plate, const Wave& wave,
                  const QrcsConfig& config) {
    return QrcsEngine(plate, wave, config).chi();
}

} // namespace qrcs
