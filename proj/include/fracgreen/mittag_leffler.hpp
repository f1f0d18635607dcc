#pragma once

#include <string>
#include <utility>

#include "fracgreen/quadrature.hpp"
#include "fracgreen/series_control.hpp"

namespace fracgreen {

struct MLQuery {
    double alpha; // > 0
    double beta;  // > 0
    double x;     // finite real argument
    void validate() const;
};

enum class MLMethod { Series, AsymptoticSub2, AsymptoticSup2, IntegralRep, ClosedForm, Duplication };

std::string to_string(MLMethod m);

// Partial sum of sum_k x^k / Gamma(k*alpha + beta), truncated once terms
// drop below ctrl.abs_tol while decreasing. Gamma goes through log-gamma so
// large indices do not overflow. Throws SeriesDiverging when terms are
// still growing at ctrl.max_terms.
double ml_series(const MLQuery& q, const SeriesControl& ctrl = {});

// N-term algebraic expansion of E_alpha(-x^alpha) for large x, alpha in
// (0,2): -sum_{k=1..N} (-1)^k / (Gamma(1-alpha k) x^(alpha k)). Terms whose
// Gamma argument hits a non-positive integer contribute exactly zero.
double ml_asymptotic_sub2(double alpha, double x, int n_terms);

// Leading exponential sum of E_alpha(-x^alpha) for alpha >= 2:
// (1/alpha) sum over exponents exp(i pi (2n-1)/alpha), conjugate pairs
// combined into real cosine terms, with 2N-1 <= alpha/2.
double ml_asymptotic_sup2(double alpha, double x);

// E_alpha(-x^alpha) for alpha in (0,2) strictly, through the real-axis
// integral representation with a cos(x t) kernel. Fails (DomainError) for
// alpha >= 2 where the representation breaks down.
double ml_integral_rep(double alpha, double x, const QuadConfig& cfg = {});

// Region-dispatched evaluation of E_{alpha,beta}(x); reports the method.
std::pair<double, MLMethod> ml_eval(const MLQuery& q);

// |E_{alpha,alpha}(x) - alpha * central difference of E_alpha at x|,
// a cross-validation diagnostic for the derivative identity.
double ml_deriv_identity_residual(double alpha, double x, double h);

namespace detail {

struct MLApprox {
    double value = 0.0;
    double err_est = 1e300;
    bool usable = false;
};

// E_{alpha,beta}(-z), z >= 0 large: paired-exponential terms plus the
// algebraic reciprocal-Gamma series, truncated at its smallest term. The
// returned err_est is the first omitted algebraic term.
MLApprox ml_asym_neg(double alpha, double beta, double z);

// Same for positive argument E_{alpha,beta}(+z).
MLApprox ml_asym_pos(double alpha, double beta, double z);

struct SeriesScan {
    double value = 0.0;
    double peak = 0.0;      // largest |term| encountered
    double last = 0.0;      // last |term| added
    bool converged = false; // terms decayed below tolerance
    bool diverging = false; // still growing at the term cap
    double err_est = 1e300; // cancellation + truncation estimate
};

SeriesScan ml_series_scan(double alpha, double beta, double x, double abs_tol, long max_terms);

// E_{alpha,alpha}(-x^alpha) via the sin(x s) kernel representation obtained
// by differentiating the cos-kernel one (alpha in (0,2), x > 1).
double ml_integral_rep_aa(double alpha, double x, const QuadConfig& cfg);

} // namespace detail
} // namespace fracgreen
