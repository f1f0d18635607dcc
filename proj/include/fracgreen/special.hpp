#pragma once

#include <cmath>

namespace fracgreen {

// log Gamma(x) for x > 0.
double log_gamma(double x);

// 1/Gamma(x) for any real x. Returns exactly 0 at non-positive integer
// poles (within a few ulps); elsewhere uses the reflection formula for
// x <= 0 so no overflow occurs until Gamma(1-x) itself overflows.
double reciprocal_gamma(double x);

// sin(pi*x) and cos(pi*x) with the half-integer structure kept exact.
double sin_pi(double x);
double cos_pi(double x);

namespace detail {

// Compensated (Neumaier) accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;
    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

} // namespace detail
} // namespace fracgreen
