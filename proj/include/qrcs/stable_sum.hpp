// SPDX-License-Identifier: Apache-2.0
//
// stable_sum.hpp - compensated (Neumaier) accumulation for long
// cancellation-prone sums.

#pragma once

#include <cmath>

namespace qrcs {

/// Error-free-transformation accumulator. Neumaier's variant of Kahan
/// summation: the correction also absorbs the case |input| > |sum|.
class StableSum {
public:
    StableSum() = default;
    explicit StableSum(double init) : sum_(init) {}

    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            comp_ += (sum_ - t) + x;
        else
            comp_ += (x - t) + sum_;
        sum_ = t;
    }

    StableSum& operator+=(double x) {
        add(x);
        return *this;
    }

    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace qrcs
