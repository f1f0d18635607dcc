#include "fracgreen/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fracgreen/errors.hpp"

namespace fracgreen {

namespace {
// std::lgamma writes the global signgam on glibc; use the reentrant form.
double lgamma_safe(double x) {
#if defined(__GLIBC__)
    int sign = 0;
    return ::lgamma_r(x, &sign);
#else
    return std::lgamma(x);
#endif
}
} // namespace

double log_gamma(double x) {
    if (!(x > 0.0))
        throw DomainError("log_gamma: argument must be positive");
    return lgamma_safe(x);
}

double sin_pi(double x) {
    // sin(pi*x) = (-1)^n sin(pi*r) with x = n + r, |r| <= 1/2.
    double n = std::round(x);
    double r = x - n;
    double s = std::sin(std::numbers::pi * r);
    return (std::fmod(std::abs(n), 2.0) == 1.0) ? -s : s;
}

double cos_pi(double x) {
    double n = std::round(x);
    double r = x - n;
    if (std::abs(r) == 0.5) return 0.0;
    double c = std::cos(std::numbers::pi * r);
    return (std::fmod(std::abs(n), 2.0) == 1.0) ? -c : c;
}

double reciprocal_gamma(double x) {
    if (x > 0.0) {
        if (x > 170.0) return 0.0; // 1/Gamma underflows
        return std::exp(-lgamma_safe(x));
    }
    double n = std::round(x);
    if (std::abs(x - n) <= 1e-12 * std::max(1.0, std::abs(x)))
        return 0.0; // pole of Gamma
    // 1/Gamma(x) = Gamma(1-x) sin(pi x) / pi
    double lg = lgamma_safe(1.0 - x);
    double s = sin_pi(x);
    if (lg > 700.0) {
        // assemble in log space to postpone overflow
        double lmag = lg + std::log(std::abs(s)) - std::log(std::numbers::pi);
        if (lmag > 708.0) return std::copysign(std::numeric_limits<double>::infinity(), s);
        return std::copysign(std::exp(lmag), s);
    }
    return std::exp(lg) * s / std::numbers::pi;
}

} // namespace fracgreen
