// SPDX-License-Identifier: Apache-2.0
//
// link_budget.hpp - quantum radar range equation and quantum sensitivity
// limits.

#pragma once

namespace qrcs {

/// Parameter set of the quantum radar equation
/// P_r = P_t * A_r * sigma_Q / ((4*pi)^2 * R^4).
struct QuantumLink {
    double transmit_power;       // W
    double receive_aperture;     // m^2
    double sigma_q;              // m^2
    double range;                // m
    double amplitude_norm = 1.0; // dimensionless signal amplitude normalization

    QuantumLink(double pt, double ar, double sigma, double r, double eps0 = 1.0);
};

struct PhaseLimits {
    long photon_count;
    double heisenberg; // rad, 1/N
    double shot_noise; // rad, 1/sqrt(N)
};

enum class QiGainReading { exponential, linear }; // 2^m vs 2*m

/// Received power, W. Exact closed form, strictly decreasing in range.
double received_power(const QuantumLink& link);

/// Expected scattered intensity at the receiver in the large-R limit:
/// 4*pi*eps0^2*sigma_q / ((4*pi)^2 * R^4). Consistent with received_power
/// via P_r = I_s * A_r and P_t = 4*pi*eps0^2.
double received_intensity(double amplitude_norm, double sigma_q, double range);

/// Range at which the received power drops to min_detectable_power.
/// Throws std::domain_error when sigma_q = 0 (target invisible).
double max_range(const QuantumLink& link, double min_detectable_power);

/// Heisenberg (1/N) and shot-noise (1/sqrt(N)) phase-resolution floors.
PhaseLimits phase_limits(long photon_count);

/// True when the measured resolution beats the standard quantum limit
/// (strict comparison).
bool is_supersensitive(double measured_phase_resolution, long photon_count);

/// True when the claimed resolution is below the Heisenberg floor, which
/// no measurement strategy can reach.
bool is_below_heisenberg(double measured_phase_resolution, long photon_count);

/// SNR gain of quantum illumination with m bits of entanglement: 2^m by
/// default, the literal 2*m reading behind the switch.
double qi_snr_gain(int entanglement_bits,
                   QiGainReading reading = QiGainReading::exponential);

} // namespace qrcs
