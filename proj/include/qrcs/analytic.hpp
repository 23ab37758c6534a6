// SPDX-License-Identifier: Apache-2.0
//
// analytic.hpp - closed-form high-frequency QRCS/CRCS of a rectangular
// plate and the rectangular aperture transform.

#pragma once

#include "qrcs/cross_section.hpp"
#include "qrcs/scene.hpp"

namespace qrcs {

/// sin(x)/x with sinc(0) = 1. A short series handles |x| < 1e-4 so the
/// removable singularity stays exact to 1e-15.
double sinc(double x);

/// Fourier transform of the plate indicator at in-plane kernel (qx, qy):
/// (a*b) * sinc(qx*a/2) * sinc(qy*b/2), m^2. Continuous everywhere.
double aperture_transform_rect(const PlateTarget& plate, double qx, double qy);

/// High-frequency quantum cross section of the plate, monostatic sweep in
/// the phi = 0 plane: 4*pi*(ab)^2/lambda^2 * |cos t| * sinc^2(k*a*sin t).
CrossSection qrcs_plate_highfreq(const PlateTarget& plate, const Wave& wave,
                                 double theta);

/// Classical counterpart: same shape with cos^2 in place of |cos|.
CrossSection crcs_plate(const PlateTarget& plate, const Wave& wave,
                        double theta);

/// Pointwise quantum/classical ratio 1/|cos theta|. Throws
/// std::domain_error for |theta| >= pi/2 (grazing).
double sidelobe_ratio(double theta);

} // namespace qrcs
