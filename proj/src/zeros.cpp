#include "fracgreen/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/parallel.hpp"

namespace fracgreen {

void OscIntegralParams::validate() const {
    if (!(a < 1.0)) throw DomainError("OscIntegralParams: need a < 1 for integrability");
    if (!(b >= 0.0)) throw DomainError("OscIntegralParams: need b >= 0");
}

namespace {

using std::numbers::pi;

constexpr double kExactZero = 1e-13;

double bisect_root(const PiSeriesEvaluator& G, double lo, double hi, double flo, double tol) {
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break; // double resolution reached
        const double fm = G(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    const double r = std::log(hi / lo) / (n - 1);
    for (int i = 0; i < n; ++i) g[i] = lo * std::exp(r * i);
    g.back() = hi;
    return g;
}

} // namespace

std::vector<ZeroRecord> scan_pi_zeros(double alpha, double c_max, int n_grid, double tol) {
    if (!(alpha > 1.0))
        throw DomainError("scan_pi_zeros: series evaluation of G(pi) needs alpha > 1");
    if (!(c_max > 0.0)) throw DomainError("scan_pi_zeros: c_max must be > 0");
    if (n_grid < 2) throw DomainError("scan_pi_zeros: n_grid must be >= 2");
    if (!(tol > 0.0)) throw DomainError("scan_pi_zeros: tol must be > 0");

    const PiSeriesEvaluator G(alpha);
    const double c_min = std::min(0.05, c_max / 1e6);
    const std::vector<double> grid = log_grid(c_min, c_max, n_grid);
    std::vector<double> vals(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) vals[i] = G(grid[i]);

    // below this, the sign of the evaluated series is summation noise
    // (compensated long double accumulation of terms of size ~1/c)
    auto noise_floor = [](double c) { return 3e-17 / (1.0 + c); };

    std::vector<ZeroRecord> out;
    bool prev_degenerate = false;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        // a grid point essentially on a root: |G| below threshold AND the
        // neighbours straddle zero (G can be legitimately tiny yet one-signed,
        // e.g. the exponentially small positive tail at alpha = 2)
        if (std::abs(vals[i]) < kExactZero && i > 0 && i + 1 < grid.size() &&
            vals[i - 1] * vals[i + 1] < 0.0 &&
            std::max(std::abs(vals[i - 1]), std::abs(vals[i + 1])) >
                noise_floor(grid[i])) {
            out.push_back({0, alpha, grid[i], grid[i], grid[i]});
            prev_degenerate = true;
            continue;
        }
        if (i > 0 && !prev_degenerate && vals[i - 1] * vals[i] < 0.0 &&
            std::max(std::abs(vals[i - 1]), std::abs(vals[i])) > noise_floor(grid[i])) {
            const double c = bisect_root(G, grid[i - 1], grid[i], vals[i - 1], tol);
            // shrink the reported bracket around the refined root
            double lo = std::max(grid[i - 1], c - tol), hi = std::min(grid[i], c + tol);
            if (G(lo) * G(hi) > 0.0) {
                lo = grid[i - 1];
                hi = grid[i];
            }
            out.push_back({0, alpha, c, lo, hi});
        }
        prev_degenerate = false;
    }
    for (std::size_t k = 0; k < out.size(); ++k) out[k].index = static_cast<int>(k + 1);
    return out;
}

double default_scan_cmax(double alpha) {
    // must clear the highest tracked root: the 5th root at alpha=4 sits
    // near 2.05e3, well above 4*c_alpha
    return std::max(3000.0, 1.2 * c_alpha(alpha));
}

std::vector<RootCurve> zero_curves(double alpha_lo, double alpha_hi, int n_alpha, int k_max,
                                   double c_max, int threads) {
    if (!(2.0 < alpha_lo && alpha_lo < alpha_hi && alpha_hi <= 4.0 + 1e-12))
        throw DomainError("zero_curves: need 2 < alpha_lo < alpha_hi <= 4");
    if (n_alpha < 2) throw DomainError("zero_curves: n_alpha must be >= 2");
    if (k_max < 1) throw DomainError("zero_curves: k_max must be >= 1");

    std::vector<double> alphas(n_alpha);
    for (int i = 0; i < n_alpha; ++i)
        alphas[i] = alpha_lo + (alpha_hi - alpha_lo) * i / (n_alpha - 1);

    std::vector<std::vector<ZeroRecord>> rows(alphas.size());
    detail::parallel_for(alphas.size(), threads, [&](std::size_t i) {
        const double cm = c_max > 0.0 ? c_max : default_scan_cmax(alphas[i]);
        rows[i] = scan_pi_zeros(alphas[i], cm, 600, 1e-9);
    });

    std::vector<RootCurve> curves(k_max);
    for (int k = 0; k < k_max; ++k) curves[k].index = k + 1;
    for (std::size_t i = 0; i < alphas.size(); ++i)
        for (const auto& rec : rows[i])
            if (rec.index <= k_max)
                curves[rec.index - 1].points.emplace_back(alphas[i], rec.c);
    return curves;
}

namespace {

// roots of G(pi; ., alpha) inside a c-window, refined enough to count
std::vector<double> window_roots(double alpha, double lo, double hi) {
    const PiSeriesEvaluator G(alpha);
    const int n = 500;
    const std::vector<double> grid = log_grid(lo, hi, n);
    std::vector<double> roots;
    double prev = G(grid[0]);
    for (int i = 1; i < n; ++i) {
        const double cur = G(grid[i]);
        if (prev * cur < 0.0)
            roots.push_back(bisect_root(G, grid[i - 1], grid[i], prev, 1e-10));
        prev = cur;
    }
    return roots;
}

} // namespace

double coalescence_alpha(const RootCurve& curve_i, const RootCurve& curve_j, double tol) {
    if (!(tol > 0.0)) throw DomainError("coalescence_alpha: tol must be > 0");
    if (curve_i.points.empty() || curve_j.points.empty())
        throw CurvesDisjoint("coalescence_alpha: a curve is empty on the sampled range");

    // lowest sampled alpha where both roots are present
    double a_both = 0.0, ci = 0.0, cj = 0.0;
    for (const auto& [a, c] : curve_i.points) {
        for (const auto& [a2, c2] : curve_j.points) {
            if (std::abs(a - a2) < 1e-12 && (a_both == 0.0 || a < a_both)) {
                a_both = a;
                ci = c;
                cj = c2;
            }
        }
    }
    if (a_both == 0.0)
        throw CurvesDisjoint("coalescence_alpha: curves never coexist on the sampled range");
    if (ci > cj) std::swap(ci, cj);

    // continuation in alpha: both_exist tested on a window around the pair
    double wlo = 0.65 * ci, whi = 1.5 * cj;
    auto both_exist = [&](double alpha) {
        const auto roots = window_roots(alpha, wlo, whi);
        if (roots.size() >= 2) {
            wlo = 0.65 * roots.front();
            whi = 1.5 * roots.back();
            ci = roots.front();
            cj = roots.back();
            return true;
        }
        return false;
    };

    double hi = a_both; // both exist here
    if (!both_exist(hi))
        throw CurvesDisjoint("coalescence_alpha: pair not recovered at the sampled alpha");
    // walk down in growing steps until the pair disappears
    double step = 0.02;
    double lo = hi - step;
    while (lo > 2.0 + 1e-6 && both_exist(lo)) {
        hi = lo;
        step *= 2.0;
        lo = hi - step;
    }
    if (lo <= 2.0 + 1e-6) {
        lo = 2.0 + 1e-6;
        if (both_exist(lo))
            throw CurvesDisjoint("coalescence_alpha: pair persists down to alpha = 2");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (both_exist(mid))
            hi = mid;
        else
            lo = mid;
    }
    const double a_star = 0.5 * (lo + hi);

    // a genuine coalescence closes the gap approaching the boundary; ci/cj
    // hold the pair from the last successful probe, within tol of a_star
    if ((cj - ci) / cj > 0.25)
        throw CurvesDisjoint("coalescence_alpha: roots do not merge at the existence boundary");
    return a_star;
}

std::vector<std::pair<double, double>> transcendental_roots_alpha4(int n_max, double tol) {
    if (n_max < 1) throw DomainError("transcendental_roots_alpha4: n_max must be >= 1");
    if (!(tol > 0.0)) throw DomainError("transcendental_roots_alpha4: tol must be > 0");
    auto f = [](double a) { return std::tanh(pi * a) + std::tan(pi * a); };
    std::vector<std::pair<double, double>> out;
    for (int n = 1; n <= n_max; ++n) {
        const double base = n - 0.25;
        // distance of the root above n - 1/4 shrinks like exp(-2 pi a)
        const double delta = std::exp(-2.0 * pi * base) / pi;
        const double ulp = std::numeric_limits<double>::epsilon() * base;
        double a_n;
        if (delta < 4.0 * ulp) {
            a_n = base; // root coincides with n - 1/4 to double precision
        } else {
            double lo = base + 0.25 * delta, hi = n - 1e-9;
            double flo = f(lo);
            if (flo > 0.0) lo = base + 4.0 * ulp, flo = f(lo);
            if (!(flo < 0.0) || !(f(hi) > 0.0))
                throw BracketFailure("transcendental_roots_alpha4: endpoint signs coincide");
            while (hi - lo > tol) {
                const double mid = 0.5 * (lo + hi);
                if (mid <= lo || mid >= hi) break;
                const double fm = f(mid);
                if (fm < 0.0)
                    lo = mid, flo = fm;
                else
                    hi = mid;
            }
            a_n = 0.5 * (lo + hi);
        }
        out.emplace_back(a_n, 4.0 * a_n * a_n * a_n * a_n);
    }
    return out;
}

namespace {

// sech^2(t/2) e^(mu t) written in overflow-safe exponentials
double sech2_exp(double t, double mu) {
    const double em = std::exp(-t);
    const double den = (1.0 + em) * (1.0 + em);
    return 4.0 * std::exp((mu - 1.0) * t) / den;
}

} // namespace

double I_ab(const OscIntegralParams& p, const QuadConfig& cfg) {
    p.validate();
    auto g = [&](double t) { return sech2_exp(t, p.a); };
    return oscillatory_cos_quad(g, p.b, cfg).value;
}

std::pair<double, double> I_ab_split(const OscIntegralParams& p, const QuadConfig& cfg) {
    p.validate();
    auto g1 = [&](double t) { return 0.5 * (sech2_exp(t, p.a) + sech2_exp(t, -p.a)); };
    auto g2 = [&](double t) { return 0.5 * (sech2_exp(t, p.a) - sech2_exp(t, -p.a)); };
    return {oscillatory_cos_quad(g1, p.b, cfg).value, oscillatory_cos_quad(g2, p.b, cfg).value};
}

double I1_asym(const OscIntegralParams& p) {
    p.validate();
    return 4.0 * pi * (p.b * std::cos(pi * p.a) + p.a * std::sin(pi * p.a)) * std::exp(-pi * p.b);
}

double I2_asym(const OscIntegralParams& p) {
    p.validate();
    return -p.a / (p.b * p.b);
}

FirstZeroPrediction predict_first_zero(double alpha) {
    if (!(alpha > 2.0 && alpha <= 2.5))
        throw DomainError("predict_first_zero: asymptotic regime is alpha in (2, 2.5]");
    const double cosw = std::cos(pi / alpha), sinw = std::sin(pi / alpha);
    auto h = [&](double c) {
        const double r = std::pow(c, 1.0 / alpha);
        const double b = r * sinw;
        return std::log(r * cosw) - std::log(4.0 * pi * b * b * b) + pi * b;
    };
    double lo = 1.0, hi = 1e6;
    if (!(h(lo) < 0.0 && h(hi) > 0.0))
        throw NoRoot("predict_first_zero: no sign change of the implicit equation on [1, 1e6]");
    for (int it = 0; it < 200 && hi - lo > 1e-10 * hi; ++it) {
        const double mid = std::sqrt(lo * hi);
        (h(mid) < 0.0 ? lo : hi) = mid;
    }
    FirstZeroPrediction out;
    out.c_root = std::sqrt(lo * hi);
    const double l = std::log((alpha - 2.0) / 16.0);
    out.c_loglaw = l * l / (pi * pi);
    return out;
}

} // namespace fracgreen
