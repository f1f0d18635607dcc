#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "fracgreen/errors.hpp"
#include "fracgreen/quadrature.hpp"

using namespace fracgreen;
using std::numbers::pi;

TEST_CASE("embedded rule integrates polynomials up to degree 22 exactly") {
    // the Kronrod extension of Gauss-7 has degree 22; a wrong node or
    // weight shows up immediately at high degree
    QuadConfig cfg;
    cfg.max_subdivisions = 1; // single application of the rule
    for (int k : {0, 1, 5, 12, 20, 22}) {
        auto f = [k](double t) { return std::pow(t, k); };
        QuadResult r = adaptive_quad(f, 0.0, 1.0, cfg);
        CHECK(r.value == doctest::Approx(1.0 / (k + 1)).epsilon(1e-14));
    }
}

TEST_CASE("adaptive_quad basic examples") {
    QuadConfig cfg;
    SUBCASE("constant") {
        QuadResult r = adaptive_quad([](double) { return 1.0; }, 0.0, 1.0, cfg);
        CHECK(std::abs(r.value - 1.0) <= cfg.abs_tol);
        CHECK(r.converged);
    }
    SUBCASE("sin over [0,pi]") {
        QuadResult r = adaptive_quad([](double t) { return std::sin(t); }, 0.0, pi, cfg);
        CHECK(std::abs(r.value - 2.0) <= cfg.abs_tol);
    }
    SUBCASE("endpoint singularity t^(-1/2)") {
        // oracle: exact antiderivative 2*sqrt(t) on [0,1]
        QuadResult r = adaptive_quad([](double t) { return 1.0 / std::sqrt(t); }, 0.0, 1.0, cfg);
        CHECK(std::abs(r.value - 2.0) <= 10.0 * cfg.abs_tol);
    }
    SUBCASE("invalid interval") {
        CHECK_THROWS_AS(adaptive_quad([](double) { return 1.0; }, 1.0, 1.0, cfg),
                        InvalidInterval);
        CHECK_THROWS_AS(adaptive_quad([](double) { return 1.0; }, 2.0, 1.0, cfg),
                        InvalidInterval);
    }
    SUBCASE("non-convergence is flagged, not thrown") {
        QuadConfig tight;
        tight.abs_tol = 1e-15;
        tight.max_subdivisions = 3;
        QuadResult r =
            adaptive_quad([](double t) { return 1.0 / std::sqrt(1e-30 + t); }, 0.0, 1.0, tight);
        CHECK_FALSE(r.converged);
        CHECK(std::isfinite(r.value));
    }
}

TEST_CASE("power_singular_quad removes the endpoint singularity") {
    QuadConfig cfg;
    // t^(sigma-1) * cos(t): compare against deep-bisection adaptive
    for (double sigma : {0.3, 0.6}) {
        auto f = [sigma](double t) { return std::pow(t, sigma - 1.0) * std::cos(t); };
        QuadResult a = power_singular_quad(f, sigma, 1.0, cfg);
        QuadResult b = adaptive_quad(f, 0.0, 1.0, cfg);
        CHECK(a.value == doctest::Approx(b.value).epsilon(1e-9));
        CHECK(a.n_evals < b.n_evals); // substitution is the cheaper route
    }
}

TEST_CASE("semi_infinite_quad examples") {
    QuadConfig cfg;
    SUBCASE("exp(-t)") {
        QuadResult r = semi_infinite_quad([](double t) { return std::exp(-t); },
                                          [](double T) { return std::exp(-T); }, cfg);
        CHECK(std::abs(r.value - 1.0) <= cfg.abs_tol);
        CHECK(r.converged);
    }
    SUBCASE("t exp(-t) = Gamma(2)") {
        QuadResult r = semi_infinite_quad([](double t) { return t * std::exp(-t); },
                                          [](double T) { return (T + 1.0) * std::exp(-T); }, cfg);
        CHECK(std::abs(r.value - 1.0) <= cfg.abs_tol);
    }
    SUBCASE("sech^2(t/2) exp(t/2) vs adaptive reference") {
        auto f = [](double t) {
            const double em = std::exp(-t);
            return 4.0 * std::exp(-0.5 * t) / ((1.0 + em) * (1.0 + em));
        };
        QuadConfig ref_cfg;
        ref_cfg.abs_tol = 1e-12;
        const double ref = adaptive_quad(f, 0.0, 60.0, ref_cfg).value;
        QuadResult r =
            semi_infinite_quad(f, [](double T) { return 8.0 * std::exp(-0.5 * T); }, cfg);
        CHECK(std::abs(r.value - ref) <= 1e-9);
    }
    SUBCASE("tail not resolved") {
        QuadConfig cut = cfg;
        cut.tail_cutoff = 30.0;
        CHECK_THROWS_AS(semi_infinite_quad([](double t) { return 1.0 / (1.0 + t * t); },
                                           [](double T) { return 1.0 / T; }, cut),
                        TailNotResolved);
    }
}

TEST_CASE("oscillatory_cos_quad examples") {
    QuadConfig cfg;
    SUBCASE("exp(-t) cos(t) = 1/2") {
        QuadResult r = oscillatory_cos_quad([](double t) { return std::exp(-t); }, 1.0, cfg);
        CHECK(std::abs(r.value - 0.5) <= cfg.abs_tol);
    }
    SUBCASE("exp(-t) cos(bt) = 1/(1+b^2)") {
        for (double b : {10.0, 35.0}) {
            QuadResult r = oscillatory_cos_quad([](double t) { return std::exp(-t); }, b, cfg);
            CHECK(std::abs(r.value - 1.0 / (1.0 + b * b)) <= cfg.abs_tol);
        }
    }
    SUBCASE("sech^2(t/2) sinh(at) against the leading-order form") {
        const double a = 0.3, b = 20.0;
        auto g = [a](double t) {
            const double em = std::exp(-t);
            const double den = (1.0 + em) * (1.0 + em);
            return 2.0 * (std::exp((a - 1.0) * t) - std::exp((-a - 1.0) * t)) / den;
        };
        QuadResult r = oscillatory_cos_quad(g, b, cfg);
        CHECK(std::abs(r.value - (-a / (b * b))) <= 10.0 * a / std::pow(b, 4));
    }
    SUBCASE("slowly decaying envelope is Abel-summed by extrapolation") {
        // int_0^inf cos(bt)/sqrt(1+t) dt converges only conditionally
        auto g = [](double t) { return 1.0 / std::sqrt(1.0 + t); };
        QuadConfig loose = cfg;
        loose.abs_tol = 1e-9;
        QuadResult r5 = oscillatory_cos_quad(g, 5.0, loose);
        // reference: Fresnel-type closed form via substitution u = b(1+t)
        // int = (cos b * C + sin b * S)/..., checked against a dense adaptive
        // proxy over many periods with Richardson refinement is overkill;
        // instead require agreement between two different frequencies'
        // analytic relation is unavailable, so verify stability under
        // tolerance tightening
        QuadConfig tight = cfg;
        tight.abs_tol = 1e-11;
        QuadResult r5t = oscillatory_cos_quad(g, 5.0, tight);
        CHECK(std::abs(r5.value - r5t.value) <= 2e-9);
        CHECK(r5.converged);
    }
}

TEST_CASE("quadrature linearity and interval additivity") {
    QuadConfig cfg;
    auto f = [](double t) { return std::exp(-t) * std::cos(3.0 * t); };
    auto g = [](double t) { return 1.0 / (1.0 + t * t); };
    SUBCASE("linearity") {
        QuadResult rf = adaptive_quad(f, 0.0, 4.0, cfg);
        QuadResult rg = adaptive_quad(g, 0.0, 4.0, cfg);
        QuadResult rs = adaptive_quad([&](double t) { return f(t) + g(t); }, 0.0, 4.0, cfg);
        CHECK(std::abs(rs.value - (rf.value + rg.value)) <=
              2.0 * (rf.err_estimate + rg.err_estimate + rs.err_estimate));
    }
    SUBCASE("additivity") {
        QuadResult whole = adaptive_quad(f, 0.0, 2.5, cfg);
        QuadResult left = adaptive_quad(f, 0.0, 1.0, cfg);
        QuadResult right = adaptive_quad(f, 1.0, 2.5, cfg);
        CHECK(std::abs(whole.value - (left.value + right.value)) <=
              whole.err_estimate + left.err_estimate + right.err_estimate + 1e-15);
    }
}

TEST_CASE("error estimate honesty on the polynomial-times-exponential family") {
    // exact moments by the downward recurrence I_k = k I_{k-1} - B^k e^-B
    const double B = 8.0;
    long double moments[10];
    moments[0] = 1.0L - std::exp((long double)-B);
    for (int k = 1; k <= 9; ++k)
        moments[k] = k * moments[k - 1] - powl((long double)B, k) * expl((long double)-B);

    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    std::uniform_int_distribution<int> deg(0, 9);
    QuadConfig cfg;
    cfg.abs_tol = 1e-11;
    int ok = 0;
    const int trials = 300;
    for (int t = 0; t < trials; ++t) {
        const int d = deg(rng);
        double a[10];
        long double exact = 0.0L;
        for (int k = 0; k <= d; ++k) {
            a[k] = coef(rng);
            exact += a[k] * moments[k];
        }
        auto f = [&](double x) {
            double p = 0.0;
            for (int k = d; k >= 0; --k) p = p * x + a[k];
            return p * std::exp(-x);
        };
        QuadResult r = adaptive_quad(f, 0.0, B, cfg);
        if (std::abs(r.value - (double)exact) <= 5.0 * std::max(r.err_estimate, 1e-16)) ++ok;
    }
    CHECK(ok >= trials * 99 / 100);
}

TEST_CASE("converged flag honours the configured tolerances") {
    QuadConfig cfg;
    cfg.abs_tol = 1e-8;
    QuadResult r = adaptive_quad([](double t) { return std::sin(t) * std::sin(t); }, 0.0, 2.0, cfg);
    CHECK(r.converged);
    CHECK(r.err_estimate <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(r.value)));
    CHECK(r.n_evals > 0);
}
