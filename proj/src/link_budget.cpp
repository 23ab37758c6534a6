// SPDX-License-Identifier: Apache-2.0

#include "qrcs/link_budget.hpp"

#include "qrcs/scene.hpp"

#include <cmath>
#include <stdexcept>

namespace qrcs {

QuantumLink::QuantumLink(double pt, double ar, double sigma, double r, double eps0)
    : transmit_power(pt), receive_aperture(ar), sigma_q(sigma), range(r),
      amplitude_norm(eps0) {
    if (!(pt > 0.0)) throw std::invalid_argument("transmit power must be positive");
    if (!(ar > 0.0)) throw std::invalid_argument("receive aperture must be positive");
    if (!(sigma >= 0.0)) throw std::invalid_argument("sigma_q must be nonnegative");
    if (!(r > 0.0)) throw std::invalid_argument("range must be positive");
}

namespace {
const double kSixteenPiSq = 16.0 * kPi * kPi;
}

double received_power(const QuantumLink& link) {
    const double r2 = link.range * link.range;
    return link.transmit_power * link.receive_aperture * link.sigma_q /
           (kSixteenPiSq * r2 * r2);
}

double received_intensity(double amplitude_norm, double sigma_q, double range) {
    if (!(range > 0.0)) throw std::invalid_argument("range must be positive");
    const double r2 = range * range;
    return kFourPi * amplitude_norm * amplitude_norm * sigma_q / (kSixteenPiSq * r2 * r2);
}

double max_range(const QuantumLink& link, double min_detectable_power) {
    if (!(min_detectable_power > 0.0))
        throw std::invalid_argument("min detectable power must be positive");
    if (link.sigma_q == 0.0)
        throw std::domain_error("target invisible: no finite range");
    return std::pow(link.transmit_power * link.receive_aperture * link.sigma_q /
                        (kSixteenPiSq * min_detectable_power),
                    0.25);
}

PhaseLimits phase_limits(long photon_count) {
    if (photon_count < 1)
        throw std::invalid_argument("photon count must be at least 1");
    const double n = static_cast<double>(photon_count);
    return {photon_count, 1.0 / n, 1.0 / std::sqrt(n)};
}

bool is_supersensitive(double measured_phase_resolution, long photon_count) {
    if (!(measured_phase_resolution > 0.0))
        throw std::invalid_argument("phase resolution must be positive");
    return measured_phase_resolution < phase_limits(photon_count).shot_noise;
}

bool is_below_heisenberg(double measured_phase_resolution, long photon_count) {
    if (!(measured_phase_resolution > 0.0))
        throw std::invalid_argument("phase resolution must be positive");
    return measured_phase_resolution < phase_limits(photon_count).heisenberg;
}

double qi_snr_gain(int entanglement_bits, QiGainReading reading) {
    if (entanglement_bits < 0)
        throw std::invalid_argument("entanglement bits must be nonnegative");
    if (reading == QiGainReading::linear)
        return entanglement_bits == 0 ? 1.0 : 2.0 * entanglement_bits;
    return std::ldexp(1.0, entanglement_bits);
}

} // namespace qrcs
