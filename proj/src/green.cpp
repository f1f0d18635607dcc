#include "fracgreen/green.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/mittag_leffler.hpp"
#include "fracgreen/parallel.hpp"
#include "fracgreen/special.hpp"

namespace fracgreen {

void GreenParams::validate() const {
    if (!(c > 0.0)) throw DomainError("GreenParams: c must be > 0");
    if (!(alpha > 0.0)) throw DomainError("GreenParams: alpha must be > 0");
}

namespace {

using std::numbers::pi;

double check_x(double x) {
    if (!(std::abs(x) <= pi + 1e-12)) throw DomainError("x must lie in [-pi, pi]");
    return std::min(std::abs(x), pi);
}

double eval_E(double alpha, double beta, double minus_z) {
    return ml_eval({alpha, beta, minus_z}).first;
}

// sum_{n>M} n^-s by Euler-Maclaurin (needs M >= ~50 for full precision)
double zeta_tail(double s, long M) {
    const double a = static_cast<double>(M) + 1.0;
    const double as = std::pow(a, -s);
    double sum = a * as / (s - 1.0) + 0.5 * as;
    double p = s;
    sum += p * as / (12.0 * a);
    p *= (s + 1.0) * (s + 2.0);
    sum -= p * as / (720.0 * a * a * a);
    p *= (s + 3.0) * (s + 4.0);
    sum += p * as / (30240.0 * std::pow(a, 5));
    p *= (s + 5.0) * (s + 6.0);
    sum -= p * as / (1209600.0 * std::pow(a, 7));
    return sum;
}

// head length needed by the geometric-in-c tail expansion; compared in
// floating point first, the value can overflow long
long head_length(double c, double alpha, long cap) {
    const double need = std::ceil(std::pow(5.0 * c, 1.0 / alpha));
    if (need > static_cast<double>(cap))
        throw TruncationFailure("green_fourier: series head exceeds max_terms");
    return std::max<long>(64, static_cast<long>(need));
}

// G(0) for alpha > 1: geometric expansion of the tail in powers of c
double fourier_at_zero(double c, double alpha, const SeriesControl& ctrl) {
    const long N = head_length(c, alpha, ctrl.max_terms - 8);
    long double head = 0.0L;
    for (long n = 1; n <= N; ++n)
        head += 1.0L / (static_cast<long double>(c) +
                        powl(static_cast<long double>(n), static_cast<long double>(alpha)));
    double tail = 0.0;
    double cj = 1.0;
    for (int j = 0; j < 64; ++j) {
        const double t = cj * zeta_tail(alpha * (j + 1), N);
        tail += t;
        if (std::abs(t) < 0.02 * pi * ctrl.abs_tol) break;
        cj *= -c;
    }
    return 0.5 / pi * (1.0 / c + 2.0 * (static_cast<double>(head) + tail));
}

// tail of sum_{n>N} cos(n x) n^-s through the Laplace kernel:
// Re[ e^{i(N+1)x} (N+1)^-s / Gamma(s) * int_0^inf v^(s-1) e^-v / (1 - e^{ix} e^{-v/(N+1)}) dv ]
double osc_zeta_tail(double s, double x, long first, const QuadConfig& qcfg) {
    const std::complex<double> eix = std::polar(1.0, x);
    const std::complex<double> phase = std::polar(1.0, static_cast<double>(first) * x);
    const double inv = 1.0 / static_cast<double>(first);
    auto f = [&](double v) {
        const std::complex<double> den = 1.0 - eix * std::exp(-v * inv);
        return std::pow(v, s - 1.0) * std::exp(-v) * (phase / den).real();
    };
    const double V = s + 60.0;
    QuadResult r = power_singular_quad(f, std::min(s, 1.0), V, qcfg);
    return std::exp(-s * std::log(static_cast<double>(first)) - log_gamma(s)) * r.value;
}

// 0 < x < 1: direct head plus c-expansion with Laplace-kernel zeta tails
double fourier_small_x(double c, double alpha, double x, const SeriesControl& ctrl) {
    const long N = head_length(c, alpha, std::min<long>(ctrl.max_terms, 2000000));
    long double head = 0.0L;
    for (long n = 1; n <= N; ++n)
        head += static_cast<long double>(std::cos(n * x)) /
                (static_cast<long double>(c) +
                 powl(static_cast<long double>(n), static_cast<long double>(alpha)));

    QuadConfig qcfg;
    qcfg.abs_tol = 1e-16;
    qcfg.rel_tol = 5e-14;
    qcfg.max_subdivisions = 2000;

    const double denom = 2.0 * std::sin(0.5 * x);
    const double ratio = c * std::pow(static_cast<double>(N) + 1.0, -alpha); // <= 1/5
    double tail = 0.0;
    double cj = 1.0;
    double bound = std::pow(static_cast<double>(N) + 1.0, -alpha) * (2.0 / denom + 1.0);
    for (int j = 0; j < 64; ++j) {
        tail += cj * osc_zeta_tail(alpha * (j + 1), x, N + 1, qcfg);
        if (bound < 0.02 * pi * ctrl.abs_tol) break;
        cj *= -c;
        bound *= ratio;
    }
    return 0.5 / pi * (1.0 / c + 2.0 * (static_cast<double>(head) + tail));
}

// x in [1, pi]: direct head plus Euler-transformed tail
double fourier_euler(double c, double alpha, double x, const SeriesControl& ctrl) {
    const double denom = 2.0 * std::sin(0.5 * x); // |1 - e^{ix}|
    const double w = std::log(5.0 / ctrl.abs_tol) + 4.0;
    const long N = std::max<long>(64, static_cast<long>(std::ceil(w / denom)));
    if (N + 40 > ctrl.max_terms)
        throw TruncationFailure("green_fourier: series head exceeds max_terms");
    long double head = 0.0L;
    for (long n = 1; n <= N; ++n)
        head += static_cast<long double>(std::cos(n * x)) /
                (static_cast<long double>(c) +
                 powl(static_cast<long double>(n), static_cast<long double>(alpha)));

    constexpr int J = 26;
    long double d[J + 2];
    for (int m = 0; m <= J + 1; ++m)
        d[m] = 1.0L / (static_cast<long double>(c) +
                       powl(static_cast<long double>(N + 1 + m), static_cast<long double>(alpha)));
    const std::complex<long double> z = std::polar(1.0L, static_cast<long double>(x));
    const std::complex<long double> r = z / (1.0L - z);
    std::complex<long double> factor =
        std::polar(1.0L, static_cast<long double>((N + 1) * x)) / (1.0L - z);
    std::complex<long double> tail = 0.0L;
    const double tol_term = 0.02 * pi * ctrl.abs_tol;
    int quiet = 0;
    for (int j = 0; j <= J; ++j) {
        tail += factor * d[0];
        const double mag = static_cast<double>(fabsl(d[0]) * std::abs(factor));
        if (mag < tol_term) {
            if (++quiet >= 2) break;
        } else {
            quiet = 0;
        }
        for (int m = 0; m <= J - j; ++m) d[m] = d[m + 1] - d[m];
        factor *= r;
    }
    return 0.5 / pi *
           (1.0 / c + 2.0 * (static_cast<double>(head) + static_cast<double>(tail.real())));
}

} // namespace

double green_fourier(const GreenParams& p, double x, const SeriesControl& ctrl) {
    p.validate();
    if (!(ctrl.abs_tol > 0.0)) throw DomainError("green_fourier: abs_tol must be > 0");
    const double ax = check_x(x);
    if (ax == 0.0) {
        if (p.alpha <= 1.0)
            throw SingularPoint("green_fourier: G(0) = +inf for alpha <= 1");
        return fourier_at_zero(p.c, p.alpha, ctrl);
    }
    if (ax < 1.0) return fourier_small_x(p.c, p.alpha, ax, ctrl);
    return fourier_euler(p.c, p.alpha, ax, ctrl);
}

double c_alpha(double alpha) {
    if (!(alpha > 2.0)) throw DomainError("c_alpha: defined for alpha > 2 only");
    const long double a = alpha;
    return static_cast<double>(powl(cosl(std::numbers::pi_v<long double> / a), -a));
}

double green_closed_alpha2(double c, double x) {
    if (!(c > 0.0)) throw DomainError("green_closed_alpha2: c must be > 0");
    const double ax = check_x(x);
    const double rc = std::sqrt(c);
    const double A = rc * (pi - ax), B = rc * pi;
    if (B < 350.0) return std::cosh(A) / (2.0 * rc * std::sinh(B));
    return std::exp(A - B) * (1.0 + std::exp(-2.0 * A)) /
           (2.0 * rc * (1.0 - std::exp(-2.0 * B)));
}

double green_closed_alpha4(double c, double x) {
    if (!(c > 0.0)) throw DomainError("green_closed_alpha4: c must be > 0");
    const double ax = check_x(x);
    const double a = std::pow(0.25 * c, 0.25);
    const double g = std::sinh(a * ax) * std::cos(a * (2.0 * pi - ax)) +
                     std::cosh(a * ax) * std::sin(a * (2.0 * pi - ax)) +
                     std::sin(a * ax) * std::cosh(a * (2.0 * pi - ax)) +
                     std::cos(a * ax) * std::sinh(a * (2.0 * pi - ax));
    return g / (8.0 * a * a * a * (std::cosh(2.0 * pi * a) - std::cos(2.0 * pi * a)));
}

double green_deriv_alpha4(double c, double x) {
    if (!(c > 0.0)) throw DomainError("green_deriv_alpha4: c must be > 0");
    if (!(x >= 0.0 && x <= pi + 1e-12)) throw DomainError("green_deriv_alpha4: x in [0,pi]");
    const double ax = std::min(x, pi);
    const double a = std::pow(0.25 * c, 0.25);
    const double num = std::sinh(a * ax) * std::sin(a * (2.0 * pi - ax)) -
                       std::sin(a * ax) * std::sinh(a * (2.0 * pi - ax));
    return num / (4.0 * a * a * (std::cosh(2.0 * pi * a) - std::cos(2.0 * pi * a)));
}

namespace {

void check_validity(const GreenParams& p) {
    if (p.alpha > 2.0 && p.c >= c_alpha(p.alpha))
        throw ValidityViolation("integral representation diverges for c >= c_alpha(alpha)");
}

double growth_rate(const GreenParams& p) {
    return p.alpha > 2.0 ? std::pow(p.c, 1.0 / p.alpha) * std::cos(pi / p.alpha) : 0.0;
}

// sup over [T, 1.6T] of weight(t), times a safety factor
template <class W>
double sampled_sup(W&& weight, double T) {
    double A = 0.0;
    for (double f : {1.0, 1.15, 1.35, 1.6}) A = std::max(A, weight(f * T));
    return 1.5 * A;
}

} // namespace

double green_integral(const GreenParams& p, double x, const QuadConfig& cfg) {
    p.validate();
    cfg.validate();
    const double ax = check_x(x);
    if (p.alpha <= 1.0 && ax == 0.0)
        throw SingularPoint("green_integral: G(0) = +inf for alpha <= 1");
    check_validity(p);

    const double c = p.c, alpha = p.alpha;
    // kernel written via expm1 and sin^2(x/2): stable for small t and all x
    const double sh2 = 2.0 * std::sin(0.5 * ax) * std::sin(0.5 * ax);
    auto f = [=](double t) {
        const double em = std::exp(-t);
        const double em1 = -std::expm1(-t); // 1 - e^-t
        const double K = em * (em1 - sh2) / (em1 * em1 + 2.0 * em * sh2);
        return K * std::pow(t, alpha - 1.0) * eval_E(alpha, alpha, -c * std::pow(t, alpha));
    };
    const double gamma = growth_rate(p);
    // for alpha > 2 the dominant tail piece oscillates at rate b, which
    // buys a 1/sqrt(delta^2 + b^2) cancellation factor
    const double osc = p.alpha > 2.0
                           ? std::hypot(1.0 - gamma,
                                        std::pow(c, 1.0 / alpha) * std::sin(pi / alpha))
                           : 1.0 - gamma;
    auto weight = [=](double t) {
        return std::pow(t, alpha - 1.0) * std::abs(eval_E(alpha, alpha, -c * std::pow(t, alpha))) *
               std::exp(-gamma * t);
    };
    auto tail_bound = [&](double T) {
        return 3.5 * sampled_sup(weight, T) * std::exp(-(1.0 - gamma) * T) / osc;
    };
    QuadConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol * pi;
    // at x = 0 the kernel contributes an extra 1/t, shifting the endpoint
    // exponent from alpha to alpha - 1 (integrable only for alpha > 1)
    const double sing = ax == 0.0 ? alpha - 1.0 : alpha;
    QuadResult I = semi_infinite_quad(f, tail_bound, inner, sing);
    return 0.5 / (pi * c) + I.value / pi;
}

double green_at_pi(const GreenParams& p, PiMethod method) {
    p.validate();
    switch (method) {
        case PiMethod::Series:
            return green_fourier(p, pi);
        case PiMethod::MLIntegral: {
            check_validity(p);
            const double c = p.c, alpha = p.alpha;
            auto f = [=](double t) {
                const double em = std::exp(-t);
                const double k = em / ((1.0 + em) * (1.0 + em)); // e^t/(1+e^t)^2
                return k * eval_E(alpha, 1.0, -c * std::pow(t, alpha));
            };
            const double gamma = growth_rate(p);
            const double osc = p.alpha > 2.0
                                   ? std::hypot(1.0 - gamma, std::pow(c, 1.0 / alpha) *
                                                                 std::sin(pi / alpha))
                                   : 1.0 - gamma;
            auto weight = [=](double t) {
                return std::abs(eval_E(alpha, 1.0, -c * std::pow(t, alpha))) * std::exp(-gamma * t);
            };
            auto tail_bound = [&](double T) {
                return sampled_sup(weight, T) * std::exp(-(1.0 - gamma) * T) / osc;
            };
            QuadConfig inner;
            inner.abs_tol = 1e-10 * pi * c;
            QuadResult I = semi_infinite_quad(f, tail_bound, inner);
            return I.value / (pi * c);
        }
        case PiMethod::Csch: {
            if (!(p.alpha < 2.0))
                throw DomainError("green_at_pi: csch form valid for alpha in (0,2) only");
            const double c = p.c, alpha = p.alpha;
            const double k = std::pow(c, 1.0 / alpha);
            const double theta = 0.5 * pi * alpha;
            const double ct = std::cos(theta), st = std::sin(theta);
            auto f = [=](double s) {
                const double sa = std::pow(s, alpha);
                const double den = 1.0 + 2.0 * sa * ct + sa * sa;
                const double arg = pi * k * s;
                const double csch = arg > 700.0 ? 2.0 * std::exp(-arg) : 1.0 / std::sinh(arg);
                return sa * csch / den;
            };
            auto tail_bound = [=](double T) {
                const double Tm = std::max(T, 1.0);
                if (pi * k * Tm <= 2.0 * alpha) return std::numeric_limits<double>::infinity();
                return 3.0 / (st * st) * std::pow(Tm, alpha) * std::exp(-pi * k * Tm) / (pi * k);
            };
            const double pref = st * k / (pi * c);
            QuadConfig inner;
            inner.abs_tol = 1e-10 / std::max(pref, 1e-8);
            QuadResult I = semi_infinite_quad(f, tail_bound, inner, alpha);
            return pref * I.value;
        }
    }
    throw DomainError("green_at_pi: unknown method");
}

double green_deriv_integral(const GreenParams& p, double x, const QuadConfig& cfg) {
    p.validate();
    cfg.validate();
    if (!(p.alpha <= 2.0))
        throw DomainError("green_deriv_integral: representation needs alpha in (0,2]");
    if (!(x > 0.0 && x <= pi + 1e-12))
        throw DomainError("green_deriv_integral: x must lie in (0,pi]");
    const double ax = std::min(x, pi);
    const double cosx = std::cos(ax);
    const double c = p.c, alpha = p.alpha;
    auto f = [=](double t) {
        const double em = std::exp(-t);
        const double den = 1.0 - 2.0 * em * cosx + em * em;
        const double Q = em * (1.0 - em * em) / (den * den);
        return std::pow(t, alpha - 1.0) * eval_E(alpha, alpha, -c * std::pow(t, alpha)) * Q;
    };
    auto weight = [=](double t) {
        return std::pow(t, alpha - 1.0) * std::abs(eval_E(alpha, alpha, -c * std::pow(t, alpha)));
    };
    auto tail_bound = [&](double T) {
        return 1.2 * sampled_sup(weight, T) * std::exp(-T);
    };
    QuadConfig inner = cfg;
    inner.abs_tol = cfg.abs_tol * pi / std::max(std::sin(ax), 1e-3);
    QuadResult I = semi_infinite_quad(f, tail_bound, inner);
    return -std::sin(ax) / pi * I.value;
}

namespace {

bool is_order(double alpha, double v) { return std::abs(alpha - v) <= 1e-12; }

} // namespace

std::vector<ProfileSample> profile(const GreenParams& p, const std::vector<double>& grid,
                                   MethodPolicy policy, int threads) {
    p.validate();
    if (policy == MethodPolicy::Closed && !is_order(p.alpha, 2.0) && !is_order(p.alpha, 4.0))
        throw DomainError("profile: closed-form policy needs alpha = 2 or alpha = 4");
    std::vector<ProfileSample> out(grid.size());
    detail::parallel_for(grid.size(), threads, [&](std::size_t i) {
        const double x = grid[i];
        ProfileMethod m = ProfileMethod::Fourier;
        if (policy == MethodPolicy::Integral) {
            m = ProfileMethod::Integral;
        } else if (policy == MethodPolicy::Closed ||
                   (policy == MethodPolicy::Auto && (is_order(p.alpha, 2.0) || is_order(p.alpha, 4.0)))) {
            m = is_order(p.alpha, 2.0) ? ProfileMethod::ClosedForm2 : ProfileMethod::ClosedForm4;
        }
        double g;
        try {
            switch (m) {
                case ProfileMethod::ClosedForm2: g = green_closed_alpha2(p.c, x); break;
                case ProfileMethod::ClosedForm4: g = green_closed_alpha4(p.c, x); break;
                case ProfileMethod::Integral: g = green_integral(p, x); break;
                default: g = green_fourier(p, x); break;
            }
        } catch (const SingularPoint&) {
            g = std::numeric_limits<double>::quiet_NaN();
        }
        out[i] = {x, g, m};
    });
    return out;
}

PiSeriesEvaluator::PiSeriesEvaluator(double alpha) : alpha_(alpha) {
    if (!(alpha > 0.0)) throw DomainError("PiSeriesEvaluator: alpha must be > 0");
    pow_.resize(96 + 34);
    for (std::size_t n = 1; n <= pow_.size(); ++n)
        pow_[n - 1] = powl(static_cast<long double>(n), static_cast<long double>(alpha));
}

double PiSeriesEvaluator::operator()(double c) const {
    if (!(c > 0.0)) throw DomainError("PiSeriesEvaluator: c must be > 0");
    const long double lc = c;
    long double head = 0.0L;
    for (int n = 1; n <= 96; ++n) {
        const long double term = 1.0L / (lc + pow_[n - 1]);
        head += (n % 2 == 1) ? -term : term;
    }
    constexpr int J = 30;
    long double d[J + 2];
    for (int m = 0; m <= J + 1; ++m) d[m] = 1.0L / (lc + pow_[96 + m]);
    // sum_{n>96} (-1)^n a_n Euler-transformed at z = -1
    long double tail = 0.0L;
    long double coef = -0.5L;
    for (int j = 0; j <= J; ++j) {
        tail += coef * d[0];
        for (int m = 0; m <= J - j; ++m) d[m] = d[m + 1] - d[m];
        coef *= -0.5L;
    }
    return static_cast<double>((0.5L / std::numbers::pi_v<long double>) *
                               (1.0L / lc + 2.0L * (head + tail)));
}

} // namespace fracgreen
