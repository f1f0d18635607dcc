#pragma once

#include <vector>

#include "fracgreen/quadrature.hpp"
#include "fracgreen/series_control.hpp"

namespace fracgreen {

struct GreenParams {
    double c;     // spectral shift / wave speed, > 0
    double alpha; // fractional order, > 0
    void validate() const;
};

inline constexpr SeriesControl kGreenSeriesDefaults{1e-12, 400000};

enum class ProfileMethod { Fourier, Integral, ClosedForm2, ClosedForm4 };
enum class MethodPolicy { Auto, Fourier, Integral, Closed };
enum class PiMethod { Series, MLIntegral, Csch };

struct ProfileSample {
    double x;
    double g; // NaN marks a singular sample (x=0 with alpha <= 1)
    ProfileMethod method;
};

// Fourier-series evaluation of G(x; c, alpha) on [-pi, pi]. A direct head
// sum is paired with an analytically controlled tail: Euler-transformed
// (iterated summation by parts with the closed Dirichlet kernel) away from
// x=0, a geometric-in-c expansion with Euler-Maclaurin / Laplace-kernel
// zeta tails near and at x=0. Throws SingularPoint for alpha <= 1, x = 0;
// TruncationFailure when the tolerance is unreachable within max_terms.
double green_fourier(const GreenParams& p, double x,
                     const SeriesControl& ctrl = kGreenSeriesDefaults);

// Mittag-Leffler integral representation of G. Valid for alpha in (0,2]
// with any c > 0, and for alpha > 2 only when c < c_alpha(alpha)
// (ValidityViolation otherwise).
double green_integral(const GreenParams& p, double x, const QuadConfig& cfg = {});

// Convergence threshold [cos(pi/alpha)]^(-alpha) of the integral
// representation for alpha > 2.
double c_alpha(double alpha);

// G(pi) by three independent routes.
double green_at_pi(const GreenParams& p, PiMethod method);

// Exact forms for the local orders.
double green_closed_alpha2(double c, double x);
double green_closed_alpha4(double c, double x);
double green_deriv_alpha4(double c, double x);

// Derivative of G from the integral representation; for alpha <= 1 the
// integrand is nonnegative so the result is <= 0 on (0,pi).
double green_deriv_integral(const GreenParams& p, double x, const QuadConfig& cfg = {});

// Pointwise profile sweep; singular samples are marked NaN, not fatal.
// Output order equals grid order regardless of threads.
std::vector<ProfileSample> profile(const GreenParams& p, const std::vector<double>& grid,
                                   MethodPolicy policy = MethodPolicy::Auto, int threads = 1);

// Repeated G(pi; c) evaluations at fixed alpha (root scans): alternating
// head sum plus Euler-transformed tail, with n^alpha cached.
class PiSeriesEvaluator {
public:
    explicit PiSeriesEvaluator(double alpha);
    double operator()(double c) const;
    double alpha() const { return alpha_; }

private:
    double alpha_;
    std::vector<long double> pow_;
};

} // namespace fracgreen
