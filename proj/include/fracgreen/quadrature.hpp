#pragma once

#include <functional>

namespace fracgreen {

struct QuadConfig {
    double abs_tol = 1e-10;       // absolute error target
    double rel_tol = 0.0;         // relative error target (0 disables)
    int max_subdivisions = 2000;  // interval splits per adaptive call
    double tail_cutoff = 400.0;   // largest admissible truncation point T

    void validate() const;
};

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    long n_evals = 0;
    bool converged = false;
};

using RealFn = std::function<double(double)>;

// Globally adaptive bisection with an embedded Gauss(7)/Kronrod(15) pair.
// All nodes are interior, so integrable endpoint singularities of type
// t^(sigma-1), sigma > 0, are admissible (resolved by deep bisection).
// Throws InvalidInterval if a >= b.
QuadResult adaptive_quad(const RealFn& f, double a, double b, const QuadConfig& cfg = {});

// Integral of f over [0, inf). tail_bound(T) must bound |int_T^inf f| and
// decrease in T; the smallest T with tail_bound(T) <= abs_tol/2 is used and
// the bound is folded into err_estimate. Throws TailNotResolved when no
// T <= tail_cutoff qualifies.
//
// If singular_power < 1, f is assumed to behave like t^(singular_power-1)
// near 0 and the substitution t = u^(1/singular_power) is applied on the
// leading subinterval, removing the singularity analytically.
QuadResult semi_infinite_quad(const RealFn& f, const RealFn& tail_bound,
                              const QuadConfig& cfg = {}, double singular_power = 1.0);

// Integral of g(t) cos(b t) over [0, inf). For b > 1 the integration runs
// half-period by half-period and the alternating partial sums are
// extrapolated (Wynn epsilon), which also sums conditionally convergent
// tails. For b <= 1 it degenerates to progressive block integration, which
// requires g to decay fast enough on its own (errors as semi_infinite_quad).
QuadResult oscillatory_cos_quad(const RealFn& g, double b, const QuadConfig& cfg = {},
                                double singular_power = 1.0);

// Same machinery for a sin(b t) kernel (b > 0 required).
QuadResult oscillatory_sin_quad(const RealFn& g, double b, const QuadConfig& cfg = {},
                                double singular_power = 1.0);

// Integral of f over [0, b] where f behaves like t^(sigma-1) times a
// regular factor near 0; for sigma < 1 the substitution t = u^(1/sigma)
// removes the singularity analytically.
QuadResult power_singular_quad(const RealFn& f, double sigma, double b,
                               const QuadConfig& cfg = {});

namespace detail {

// Wynn epsilon extrapolation of a sequence of partial sums.
class EpsilonTable {
public:
    // feed the next partial sum; returns current best estimate
    double push(double s);
    double best() const { return best_; }
    // |change| between the last two best estimates; large before 3 entries
    double residual() const { return residual_; }
    int size() const { return n_; }

private:
    static constexpr int kMaxCols = 64;
    double table_[kMaxCols] = {};
    int n_ = 0;
    double best_ = 0.0;
    double residual_ = 1e300;
};

} // namespace detail
} // namespace fracgreen
