// SPDX-License-Identifier: Apache-2.0
//
// scene.hpp - targets, illuminating waves, directions, and the scatterer
// discretization shared by the analytic and numeric engines.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qrcs {

inline constexpr double kPi = 3.141592653589793238462643383279502884;
inline constexpr double kTwoPi = 2.0 * kPi;
inline constexpr double kFourPi = 4.0 * kPi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

/// Flat rectangular plate lying in the z = 0 plane, normal along +z,
/// spanning [-a/2, a/2] x [-b/2, b/2]. Dimensions in meters.
class PlateTarget {
public:
    PlateTarget(double width_a, double height_b);

    double width_a() const { return width_a_; }
    double height_b() const { return height_b_; }
    double area() const { return width_a_ * height_b_; }

private:
    double width_a_;
    double height_b_;
};

/// Monochromatic illuminating field. Only the wavelength is stored; the
/// wavenumber is always derived as 2*pi/lambda.
class Wave {
public:
    explicit Wave(double wavelength_m);

    double wavelength() const { return wavelength_; }
    double wavenumber() const { return kTwoPi / wavelength_; }

private:
    double wavelength_;
};

/// Propagation direction on the unit sphere: polar angle theta from +z in
/// [0, pi], azimuth phi in [0, 2*pi). Arbitrary real angles are normalized
/// into that range on construction.
class Direction {
public:
    Direction(double theta, double phi);

    static Direction from_unit(const Vec3& u);

    double theta() const { return theta_; }
    double phi() const { return phi_; }
    Vec3 unit() const;
    Direction reversed() const;

private:
    double theta_;
    double phi_;
};

/// Uniform cell-centered lattice of point scatterers covering the plate.
/// Positions are plate-plane coordinates in meters, centered on the origin.
class ScattererGrid {
public:
    /// Tensor lattice: the scatterers are the Cartesian product xs x ys.
    ScattererGrid(std::vector<double> xs, std::vector<double> ys,
                  double cell_area, int samples_per_wavelength);

    /// Irregular scatterer set (no lattice structure assumed).
    ScattererGrid(std::vector<Vec2> positions, double cell_area,
                  int samples_per_wavelength);

    std::span<const Vec2> positions() const { return positions_; }
    std::size_t size() const { return positions_.size(); }
    double cell_area() const { return cell_area_; }
    int samples_per_wavelength() const { return samples_per_wavelength_; }

    bool is_lattice() const { return is_lattice_; }
    std::span<const double> axis_x() const { return xs_; }
    std::span<const double> axis_y() const { return ys_; }

private:
    std::vector<Vec2> positions_;
    std::vector<double> xs_;
    std::vector<double> ys_;
    double cell_area_;
    int samples_per_wavelength_;
    bool is_lattice_;
};

inline constexpr std::size_t kDefaultScattererCap = 10'000'000;

/// Discretizes the plate into a cell-centered lattice with spacing no
/// coarser than wavelength/samples_per_wavelength along both axes.
/// Throws std::invalid_argument for spw < 2 or when the lattice would
/// exceed `cap` scatterers ("grid too dense").
ScattererGrid make_grid(const PlateTarget& plate, const Wave& wave,
                        int samples_per_wavelength,
                        std::size_t cap = kDefaultScattererCap);

/// Projected cross-sectional area A(theta) = a*b*|cos theta|, m^2.
double projected_area(const PlateTarget& plate, double theta);

/// Interference kernel q = k*(u_incident - u_detected), rad/m, with u the
/// unit propagation vectors. Monostatic geometry gives |q_inplane| = 2k sin(theta).
Vec3 scattering_vector(const Wave& wave, const Direction& incident,
                       const Direction& detected);

} // namespace qrcs
