// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>

namespace qrcs {

enum class Mode { quantum, classical };
enum class Method { analytic, numeric };

/// A radar cross section value in m^2 together with how it was obtained.
struct CrossSection {
    double value;
    Mode mode;
    Method method;

    CrossSection(double v, Mode mo, Method me) : value(v), mode(mo), method(me) {
        if (!(v >= 0.0))
            throw std::invalid_argument("cross section must be nonnegative");
    }
};

inline const char* to_string(Mode m) {
    return m == Mode::quantum ? "quantum" : "classical";
}

inline const char* to_string(Method m) {
    return m == Method::analytic ? "analytic" : "numeric";
}

} // namespace qrcs
