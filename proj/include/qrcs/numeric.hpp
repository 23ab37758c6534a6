// SPDX-License-Identifier: Apache-2.0
//
// numeric.hpp - first-principles QRCS from discrete scatterer interference
// normalized by a spherical quadrature of the scattered intensity.

#pragma once

#include "qrcs/cross_section.hpp"
#include "qrcs/quadrature.hpp"
#include "qrcs/scene.hpp"

namespace qrcs {

enum class DenominatorMethod { numeric, analytic };

struct QrcsConfig {
    int samples_per_wavelength = 10;
    int n_polar = 64;
    int n_azimuth = 128;
    DenominatorMethod denominator_method = DenominatorMethod::numeric;
    // The scattered-intensity normalization integrates over the reflection
    // hemisphere of the plate. The full-sphere alternative (every value
    // exactly halved for a flat target) is kept selectable.
    SphereDomain denominator_domain = SphereDomain::hemisphere;
    std::size_t scatterer_cap = kDefaultScattererCap;
    double denominator_floor = 1e-30; // m^4 * sr

    void validate() const;
};

/// Coherent interference intensity |F|^2 = |sum_j exp(i q.x_j) * cell_area|^2
/// in m^4. Real and imaginary parts accumulate with compensated summation;
/// tensor lattices use the exactly-factorized per-axis sums.
double interference_intensity(const ScattererGrid& grid, const Vec3& q);

/// Precomputed grid + quadrature for one plate/wave/config. All methods are
/// const and safe for concurrent use.
class QrcsEngine {
public:
    QrcsEngine(const PlateTarget& plate, const Wave& wave, const QrcsConfig& config);

    /// sigma_Q for an arbitrary incident/detected pair. The incident
    /// propagation must point toward the plate (negative z component).
    CrossSection full(const Direction& incident, const Direction& detected) const;

    /// Monostatic sigma_Q: detector looks back along the incidence line at
    /// polar angle theta (radians, |theta| <= pi/2) in the phi = 0 plane.
    CrossSection monostatic(double theta) const;

    /// chi(k,a,b) = lambda^2 * a * b / denominator(normal incidence): the
    /// exact ratio of the quadrature-normalized result to the closed-form
    /// high-frequency expression at theta = 0.
    double chi() const;

    /// Denominator of the normalization: integral of the scattered
    /// intensity over detected directions with the incidence fixed.
    double denominator(const Direction& incident) const;

    /// Integral of sigma_Q over detected directions on an independent
    /// quadrature; equals 4*pi*A_perp(theta_i) up to quadrature error.
    double scattered_integral(const Direction& incident,
                              const SphereQuadrature& outer) const;

    const ScattererGrid& grid() const { return grid_; }
    const SphereQuadrature& quadrature() const { return quad_; }
    const PlateTarget& plate() const { return plate_; }
    const Wave& wave() const { return wave_; }
    const QrcsConfig& config() const { return config_; }

private:
    CrossSection evaluate(const Direction& incident, const Direction& detected) const;

    PlateTarget plate_;
    Wave wave_;
    QrcsConfig config_;
    ScattererGrid grid_;
    SphereQuadrature quad_;
};

// One-shot wrappers (construct an engine internally).
CrossSection qrcs_full(const PlateTarget& plate, const Wave& wave,
                       const Direction& incident, const Direction& detected,
                       const QrcsConfig& config);
CrossSection qrcs_monostatic(const PlateTarget& plate, const Wave& wave,
                             double theta, const QrcsConfig& config);
double chi_factor(const PlateTarget& plate, const Wave& wave,
                  const QrcsConfig& config);

} // namespace qrcs
