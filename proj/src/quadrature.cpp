#include "fracgreen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "fracgreen/errors.hpp"
#include "fracgreen/special.hpp"

namespace fracgreen {

void QuadConfig::validate() const {
    if (!(abs_tol > 0.0)) throw DomainError("QuadConfig: abs_tol must be > 0");
    if (!(rel_tol >= 0.0)) throw DomainError("QuadConfig: rel_tol must be >= 0");
    if (max_subdivisions < 1) throw DomainError("QuadConfig: max_subdivisions must be >= 1");
    if (!(tail_cutoff > 0.0)) throw DomainError("QuadConfig: tail_cutoff must be > 0");
}

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (nodes all interior).
constexpr double kXgk[8] = {
    0.9914553711208126, 0.9491079123427585, 0.8648644233597691,
    0.7415311855993944, 0.5860872354676911, 0.4058451513773972,
    0.2077849550078985, 0.0};
constexpr double kWgk[8] = {
    0.02293532201052922, 0.06309209262997855, 0.1047900103222502,
    0.1406532597155259,  0.1690047266392679,  0.1903505780647854,
    0.2044329400752989,  0.2094821410847278};
constexpr double kWg[4] = {
    0.1294849661688697, 0.2797053914892767, 0.3818300505051189,
    0.4179591836734694};

struct RuleEval {
    double value;
    double err;
};

RuleEval gk15(const RealFn& f, double a, double b) {
    const double centr = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);

    double fv1[7], fv2[7];
    const double fc = f(centr);
    double resg = fc * kWg[3];
    double resk = fc * kWgk[7];
    double resabs = std::abs(resk);
    for (int j = 0; j < 3; ++j) {
        const int k = 2 * j + 1; // Gauss nodes sit at odd Kronrod indices
        const double absc = hl * kXgk[k];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[k] = f1;
        fv2[k] = f2;
        resg += kWg[j] * (f1 + f2);
        resk += kWgk[k] * (f1 + f2);
        resabs += kWgk[k] * (std::abs(f1) + std::abs(f2));
    }
    for (int j = 0; j < 4; ++j) {
        const int k = 2 * j;
        const double absc = hl * kXgk[k];
        const double f1 = f(centr - absc);
        const double f2 = f(centr + absc);
        fv1[k] = f1;
        fv2[k] = f2;
        resk += kWgk[k] * (f1 + f2);
        resabs += kWgk[k] * (std::abs(f1) + std::abs(f2));
    }
    const double reskh = resk * 0.5;
    double resasc = kWgk[7] * std::abs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kWgk[j] * (std::abs(fv1[j] - reskh) + std::abs(fv2[j] - reskh));

    double err = std::abs((resk - resg) * hl);
    resasc *= std::abs(hl);
    resabs *= std::abs(hl);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps))
        err = std::max(eps * 50.0 * resabs, err);
    if (!std::isfinite(resk) || !std::isfinite(err))
        err = std::numeric_limits<double>::infinity();
    return {resk * hl, err};
}

struct Interval {
    double a, b, value, err;
    bool operator<(const Interval& o) const { return err < o.err; }
};

} // namespace

QuadResult adaptive_quad(const RealFn& f, double a, double b, const QuadConfig& cfg) {
    cfg.validate();
    if (!(a < b)) throw InvalidInterval("adaptive_quad: require a < b");

    QuadResult out;
    std::priority_queue<Interval> heap;
    std::vector<Interval> frozen; // too narrow to split further

    RuleEval first = gk15(f, a, b);
    out.n_evals = 15;
    heap.push({a, b, first.value, first.err});
    double err_sum = first.err;
    double val_sum = first.value;

    const double width_floor = 50.0 * std::numeric_limits<double>::epsilon();
    int splits = 0;
    while (splits < cfg.max_subdivisions) {
        const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(val_sum));
        if (err_sum <= tol || heap.empty()) break;
        Interval worst = heap.top();
        heap.pop();
        // the floor scales with the endpoint magnitudes so that cells
        // hugging t = 0 keep bisecting into an endpoint singularity
        if (worst.b - worst.a <=
            width_floor * std::max(std::abs(worst.a), std::abs(worst.b)) + 1e-290) {
            frozen.push_back(worst);
            continue;
        }
        const double mid = 0.5 * (worst.a + worst.b);
        RuleEval le = gk15(f, worst.a, mid);
        RuleEval re = gk15(f, mid, worst.b);
        out.n_evals += 30;
        ++splits;
        err_sum += le.err + re.err - worst.err;
        val_sum += le.value + re.value - worst.value;
        heap.push({worst.a, mid, le.value, le.err});
        heap.push({mid, worst.b, re.value, re.err});
    }

    detail::CompensatedSum vs, es;
    for (const Interval& iv : frozen) {
        vs.add(iv.value);
        es.add(iv.err);
    }
    while (!heap.empty()) {
        vs.add(heap.top().value);
        es.add(heap.top().err);
        heap.pop();
    }
    out.value = vs.value();
    out.err_estimate = es.value();
    out.converged =
        out.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

namespace {

// integral of f over [0, t1] where f ~ t^(sigma-1) near 0, via t = u^(1/sigma)
QuadResult singular_prefix(const RealFn& f, double sigma, double t1, const QuadConfig& cfg) {
    const double inv = 1.0 / sigma;
    auto w = [&](double u) {
        const double t = std::pow(u, inv);
        return inv * f(t) * std::pow(t, 1.0 - sigma);
    };
    return adaptive_quad(w, 0.0, std::pow(t1, sigma), cfg);
}

} // namespace

QuadResult power_singular_quad(const RealFn& f, double sigma, double b, const QuadConfig& cfg) {
    if (!(sigma > 0.0)) throw DomainError("power_singular_quad: sigma must be > 0");
    if (!(b > 0.0)) throw InvalidInterval("power_singular_quad: upper limit must be > 0");
    if (sigma >= 1.0) return adaptive_quad(f, 0.0, b, cfg);
    return singular_prefix(f, sigma, b, cfg);
}

QuadResult semi_infinite_quad(const RealFn& f, const RealFn& tail_bound, const QuadConfig& cfg,
                              double singular_power) {
    cfg.validate();
    const double half_tol = 0.5 * cfg.abs_tol;

    double T = std::min(8.0, cfg.tail_cutoff);
    while (tail_bound(T) > half_tol && T < cfg.tail_cutoff)
        T = std::min(2.0 * T, cfg.tail_cutoff);
    if (tail_bound(T) > half_tol)
        throw TailNotResolved("semi_infinite_quad: tail bound exceeds tolerance at cutoff");
    // shrink T a little where the bound allows it
    double lo = T * 0.5, hi = T;
    for (int i = 0; i < 5; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (tail_bound(mid) <= half_tol)
            hi = mid;
        else
            lo = mid;
    }
    T = hi;

    QuadConfig inner = cfg;
    inner.abs_tol = half_tol;

    QuadResult out;
    if (singular_power < 1.0) {
        const double t1 = std::min(1.0, T);
        QuadConfig part = inner;
        part.abs_tol = 0.5 * half_tol;
        QuadResult head = singular_prefix(f, singular_power, t1, part);
        out.value = head.value;
        out.err_estimate = head.err_estimate;
        out.n_evals = head.n_evals;
        out.converged = head.converged;
        if (t1 < T) {
            QuadResult rest = adaptive_quad(f, t1, T, part);
            out.value += rest.value;
            out.err_estimate += rest.err_estimate;
            out.n_evals += rest.n_evals;
            out.converged = out.converged && rest.converged;
        }
    } else {
        out = adaptive_quad(f, 0.0, T, inner);
    }
    out.err_estimate += tail_bound(T);
    out.converged = out.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
    return out;
}

namespace detail {

double EpsilonTable::push(double s) {
    const double prev_best = best_;
    const int jmax = std::min(n_, kMaxCols - 1); // highest index on the new diagonal
    double old_jm1 = table_[0];
    double old_jm2 = 0.0;
    table_[0] = s;
    for (int j = 1; j <= jmax; ++j) {
        const double old_j = table_[j];
        const double denom = table_[j - 1] - old_jm1;
        double val;
        if (std::abs(denom) < 1e-300)
            val = 1e300;
        else
            val = old_jm2 + 1.0 / denom;
        if (!std::isfinite(val)) val = 1e300;
        table_[j] = val;
        old_jm2 = old_jm1;
        old_jm1 = old_j;
    }
    ++n_;
    int jb = std::min(n_ - 1, kMaxCols - 1);
    if (jb % 2 == 1) --jb;
    best_ = table_[jb];
    if (n_ >= 3) residual_ = std::abs(best_ - prev_best);
    return best_;
}

} // namespace detail

namespace {

QuadResult oscillatory_kernel_quad(const RealFn& g, double b, bool use_cos,
                                   const QuadConfig& cfg, double singular_power) {
    cfg.validate();
    if (b < 0.0) throw DomainError("oscillatory quad: b must be >= 0");
    if (!use_cos && b == 0.0) return {0.0, 0.0, 0, true};

    auto h = [&](double t) { return g(t) * (use_cos ? std::cos(b * t) : std::sin(b * t)); };

    QuadConfig chunk_cfg = cfg;
    chunk_cfg.abs_tol = cfg.abs_tol / 64.0;
    chunk_cfg.rel_tol = std::max(cfg.rel_tol, 1e-13);
    chunk_cfg.max_subdivisions = 400;

    QuadResult out;
    detail::CompensatedSum direct, quad_err;

    if (b > 1.0) {
        // half-period blocks; alternating partial sums extrapolated
        const double L = std::numbers::pi / b;
        detail::EpsilonTable eps;
        const int max_chunks =
            std::min(512, static_cast<int>(std::ceil(cfg.tail_cutoff / L)) + 1);
        double last_mag = std::numeric_limits<double>::infinity();
        double prev_mag = std::numeric_limits<double>::infinity();
        int stable = 0;
        for (int k = 0; k < max_chunks; ++k) {
            const double a = k * L, c = (k + 1) * L;
            QuadResult piece;
            if (k == 0 && singular_power < 1.0)
                piece = singular_prefix(h, singular_power, c, chunk_cfg);
            else
                piece = adaptive_quad(h, a, c, chunk_cfg);
            out.n_evals += piece.n_evals;
            direct.add(piece.value);
            quad_err.add(piece.err_estimate);
            eps.push(direct.value());
            prev_mag = last_mag;
            last_mag = std::abs(piece.value);

            const double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(eps.best()));
            if (k >= 7) {
                if (last_mag + prev_mag <= 0.25 * tol) {
                    // decayed on its own; no extrapolation needed
                    out.value = direct.value();
                    out.err_estimate = quad_err.value() + last_mag + prev_mag;
                    out.converged = true;
                    return out;
                }
                stable = (eps.residual() + quad_err.value() <= tol) ? stable + 1 : 0;
                if (stable >= 2) {
                    out.value = eps.best();
                    out.err_estimate = quad_err.value() + std::max(eps.residual(), 1e-18);
                    out.converged = true;
                    return out;
                }
            }
        }
        out.value = eps.best();
        out.err_estimate = quad_err.value() + eps.residual();
        out.converged = false;
        if (max_chunks * L >= cfg.tail_cutoff - 1e-9 && !out.converged)
            throw TailNotResolved("oscillatory quad: blocks not converged within tail cutoff");
        return out;
    }

    // slow oscillation: progressive block integration, g must decay
    const double L = (b > 0.2) ? std::numbers::pi / b : 8.0;
    double a = 0.0;
    int quiet = 0;
    while (a < cfg.tail_cutoff) {
        const double c = std::min(a + L, cfg.tail_cutoff);
        QuadResult piece;
        if (a == 0.0 && singular_power < 1.0)
            piece = singular_prefix(h, singular_power, c, chunk_cfg);
        else
            piece = adaptive_quad(h, a, c, chunk_cfg);
        out.n_evals += piece.n_evals;
        direct.add(piece.value);
        quad_err.add(piece.err_estimate);
        quiet = (std::abs(piece.value) <= 0.25 * cfg.abs_tol) ? quiet + 1 : 0;
        a = c;
        if (quiet >= 2) {
            out.value = direct.value();
            out.err_estimate = quad_err.value() + std::abs(piece.value);
            out.converged =
                out.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(out.value));
            return out;
        }
    }
    throw TailNotResolved("oscillatory quad: integrand tail not resolved by cutoff");
}

} // namespace

QuadResult oscillatory_cos_quad(const RealFn& g, double b, const QuadConfig& cfg,
                                double singular_power) {
    return oscillatory_kernel_quad(g, b, true, cfg, singular_power);
}

QuadResult oscillatory_sin_quad(const RealFn& g, double b, const QuadConfig& cfg,
                                double singular_power) {
    return oscillatory_kernel_quad(g, b, false, cfg, singular_power);
}

} // namespace fracgreen
