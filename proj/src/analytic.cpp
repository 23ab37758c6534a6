// SPDX-License-Identifier: Apache-2.0

#include "qrcs/analytic.hpp"

#include <cmath>
#include <stdexcept>

namespace qrcs {

double sinc(double x) {
    if (std::abs(x) < 1e-4) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

double aperture_transform_rect(const PlateTarget& plate, double qx, double qy) {
    return plate.area() * sinc(0.5 * qx * plate.width_a()) *
           sinc(0.5 * qy * plate.height_b());
}

namespace {

// Shared lobe factor of Eqs. for sigma_Q and sigma_C. Evaluating sin()
// first lets exact nulls propagate as zeros instead of denormal noise.
double lobe_squared(const PlateTarget& plate, const Wave& wave, double theta) {
    const double s = sinc(wave.wavenumber() * plate.width_a() * std::sin(theta));
    return s * s;
}

double peak_value(const PlateTarget& plate, const Wave& wave) {
    const double ab = plate.area();
    return kFourPi * ab * ab / (wave.wavelength() * wave.wavelength());
}

} // namespace

CrossSection qrcs_plate_highfreq(const PlateTarget& plate, const Wave& wave,
                                 double theta) {
    const double v = peak_value(plate, wave) * std::abs(std::cos(theta)) *
                     lobe_squared(plate, wave, theta);
    return CrossSection(v, Mode::quantum, Method::analytic);
}

CrossSection crcs_plate(const PlateTarget& plate, const Wave& wave,
                        double theta) {
    const double c = std::cos(theta);
    const double v = peak_value(plate, wave) * c * c * lobe_squared(plate, wave, theta);
    return CrossSection(v, Mode::classical, Method::analytic);
}

double sidelobe_ratio(double theta) {
    if (!(std::abs(theta) < kPi / 2.0))
        throw std::domain_error("grazing angle: ratio undefined");
    return 1.0 / std::abs(std::cos(theta));
}

} // namespace qrcs
