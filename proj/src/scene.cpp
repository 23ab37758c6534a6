// SPDX-License-Identifier: Apache-2.0

#include "qrcs/scene.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace qrcs {

PlateTarget::PlateTarget(double width_a, double height_b)
    : width_a_(width_a), height_b_(height_b) {
    if (!(width_a > 0.0) || !(height_b > 0.0))
        throw std::invalid_argument("plate dimensions must be positive");
}

Wave::Wave(double wavelength_m) : wavelength_(wavelength_m) {
    if (!(wavelength_m > 0.0))
        throw std::invalid_argument("wavelength must be positive");
}

Direction::Direction(double theta, double phi) {
    if (!std::isfinite(theta) || !std::isfinite(phi))
        throw std::invalid_argument("direction angles must be finite");
    // Reduce theta into [0, 2*pi), then reflect the upper half back into
    // [0, pi] (a polar angle beyond pi is the same ray with phi shifted).
    theta = std::fmod(theta, kTwoPi);
    if (theta < 0.0) theta += kTwoPi;
    if (theta > kPi) {
        theta = kTwoPi - theta;
        phi += kPi;
    }
    phi = std::fmod(phi, kTwoPi);
    if (phi < 0.0) phi += kTwoPi;
    theta_ = theta;
    phi_ = phi;
}

Direction Direction::from_unit(const Vec3& u) {
    const double norm = std::sqrt(u.x * u.x + u.y * u.y + u.z * u.z);
    if (!(norm > 0.0) || !std::isfinite(norm))
        throw std::invalid_argument("direction vector must be nonzero and finite");
    const double theta = std::acos(std::clamp(u.z / norm, -1.0, 1.0));
    const double phi = std::atan2(u.y, u.x);
    return Direction(theta, phi);
}

Vec3 Direction::unit() const {
    const double st = std::sin(theta_);
    return {st * std::cos(phi_), st * std::sin(phi_), std::cos(theta_)};
}

Direction Direction::reversed() const {
    return Direction(kPi - theta_, phi_ + kPi);
}

ScattererGrid::ScattererGrid(std::vector<double> xs, std::vector<double> ys,
                             double cell_area, int samples_per_wavelength)
    : xs_(std::move(xs)), ys_(std::move(ys)), cell_area_(cell_area),
      samples_per_wavelength_(samples_per_wavelength), is_lattice_(true) {
    if (xs_.empty() || ys_.empty())
        throw std::invalid_argument("lattice axes must be nonempty");
    if (!(cell_area > 0.0))
        throw std::invalid_argument("cell_area must be positive");
    positions_.reserve(xs_.size() * ys_.size());
    for (double x : xs_)
        for (double y : ys_)
            positions_.push_back({x, y});
}

ScattererGrid::ScattererGrid(std::vector<Vec2> positions, double cell_area,
                             int samples_per_wavelength)
    : positions_(std::move(positions)), cell_area_(cell_area),
      samples_per_wavelength_(samples_per_wavelength), is_lattice_(false) {
    if (positions_.empty())
        throw std::invalid_argument("scatterer set must be nonempty");
    if (!(cell_area > 0.0))
        throw std::invalid_argument("cell_area must be positive");
}

namespace {

// ceil with a guard against float noise pushing an exact integer up a step
long cells_along(double extent, double max_spacing) {
    const double v = extent / max_spacing;
    long n = static_cast<long>(std::ceil(v - 1e-9));
    return n < 1 ? 1 : n;
}

std::vector<double> centered_axis(double extent, long n) {
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double h = extent / static_cast<double>(n);
    for (long i = 0; i < n; ++i)
        xs[static_cast<std::size_t>(i)] = -0.5 * extent + (static_cast<double>(i) + 0.5) * h;
    return xs;
}

} // namespace

ScattererGrid make_grid(const PlateTarget& plate, const Wave& wave,
                        int samples_per_wavelength, std::size_t cap) {
    if (samples_per_wavelength < 2)
        throw std::invalid_argument("samples_per_wavelength must be at least 2");
    const double spacing = wave.wavelength() / samples_per_wavelength;
    const long nx = cells_along(plate.width_a(), spacing);
    const long ny = cells_along(plate.height_b(), spacing);
    const auto count = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
    if (count > cap)
        throw std::invalid_argument(
            "grid too dense: " + std::to_string(count) + " scatterers exceed cap of " +
            std::to_string(cap));
    const double cell_area =
        (plate.width_a() / static_cast<double>(nx)) * (plate.height_b() / static_cast<double>(ny));
    return ScattererGrid(centered_axis(plate.width_a(), nx),
                         centered_axis(plate.height_b(), ny), cell_area,
                         samples_per_wavelength);
}

double projected_area(const PlateTarget& plate, double theta) {
    return plate.area() * std::abs(std::cos(theta));
}

Vec3 scattering_vector(const Wave& wave, const Direction& incident,
                       const Direction& detected) {
    const double k = wave.wavenumber();
    const Vec3 ui = incident.unit();
    const Vec3 ud = detected.unit();
    return {k * (ui.x - ud.x), k * (ui.y - ud.y), k * (ui.z - ud.z)};
}

} // namespace qrcs
