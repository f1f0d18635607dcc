#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/mittag_leffler.hpp"
#include "fracgreen/special.hpp"

using namespace fracgreen;
using std::numbers::pi;

namespace {

// independent oracle: extended-precision partial sum of the defining series
long double series_ref(long double alpha, long double beta, long double x, int terms = 200) {
    long double sum = 0.0L;
    for (int k = terms; k >= 0; --k)
        sum += powl(x, k) * expl(-lgammal(k * alpha + beta));
    return sum;
}

} // namespace

TEST_CASE("ml_series basics") {
    CHECK(ml_series({1.0, 1.0, -1.0}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-12));
    for (double alpha : {0.4, 1.3, 3.7})
        CHECK(ml_series({alpha, 1.0, 0.0}) == 1.0);
    // extended-precision oracle
    const double want = static_cast<double>(series_ref(0.5L, 0.5L, -0.25L));
    CHECK(ml_series({0.5, 0.5, -0.25}) == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("ml_series reports divergence within the term budget") {
    CHECK_THROWS_AS(ml_series({0.3, 1.0, -50.0}, {1e-14, 400}), SeriesDiverging);
}

TEST_CASE("ml_asymptotic_sub2 pinned values") {
    // alpha = 1: every reciprocal Gamma factor sits on a pole
    CHECK(ml_asymptotic_sub2(1.0, 50.0, 3) == 0.0);
    CHECK(ml_asymptotic_sub2(0.5, 100.0, 1) ==
          doctest::Approx(1.0 / (std::sqrt(pi) * 10.0)).epsilon(1e-14));
    // two-term value at alpha=1.5, x=20 against the dispatcher reference;
    // the first omitted term is ~5e-6, so 1e-5 is the honest bound
    const double ref = ml_eval({1.5, 1.0, -std::pow(20.0, 1.5)}).first;
    CHECK(std::abs(ml_asymptotic_sub2(1.5, 20.0, 2) - ref) <= 1e-5);
    CHECK_THROWS_AS(ml_asymptotic_sub2(2.0, 10.0, 2), DomainError);
    CHECK_THROWS_AS(ml_asymptotic_sub2(0.5, -1.0, 2), DomainError);
}

TEST_CASE("ml_asymptotic_sup2 pinned values") {
    CHECK(ml_asymptotic_sup2(2.0, 7.0) == doctest::Approx(std::cos(7.0)).epsilon(1e-14));
    {
        const double x = 6.0, u = x / std::numbers::sqrt2;
        const double exact = std::cos(u) * std::cosh(u);
        // remainder is the decaying exponential pair, ~ e^{-x/sqrt 2}
        CHECK(std::abs(ml_asymptotic_sup2(4.0, x) - exact) <=
              2.0 * std::exp(-u) * std::abs(std::cos(u)) + 1e-3);
    }
    {
        const double x = 8.0;
        const double exact =
            std::exp(-x) / 3.0 + 2.0 / 3.0 * std::exp(0.5 * x) * std::cos(0.5 * std::sqrt(3.0) * x);
        CHECK(std::abs(ml_asymptotic_sup2(3.0, x) - exact) <= 2.0 * std::exp(-x) / 3.0 + 1e-9);
    }
    CHECK_THROWS_AS(ml_asymptotic_sup2(1.5, 5.0), DomainError);
}

TEST_CASE("ml_integral_rep examples and domain") {
    CHECK(ml_integral_rep(1.0, 2.0) == doctest::Approx(std::exp(-2.0)).epsilon(1e-8));
    CHECK(ml_integral_rep(0.5, 0.0) == doctest::Approx(1.0).epsilon(1e-9));
    {
        const double z = std::pow(1.3, 1.5);
        CHECK(std::abs(ml_integral_rep(1.5, 1.3) - ml_series({1.5, 1.0, -z})) <= 1e-8);
    }
    CHECK_THROWS_AS(ml_integral_rep(2.0, 1.0), DomainError);
    CHECK_THROWS_AS(ml_integral_rep(2.5, 1.0), DomainError);
    CHECK_THROWS_AS(ml_integral_rep(0.5, -1.0), DomainError);
}

TEST_CASE("ml_eval dispatch examples") {
    {
        const auto [v, m] = ml_eval({2.0, 1.0, -9.0});
        CHECK(v == doctest::Approx(std::cos(3.0)).epsilon(1e-14));
        CHECK(m == MLMethod::ClosedForm);
    }
    {
        const auto [v, m] = ml_eval({0.7, 1.0, -0.1});
        CHECK(m == MLMethod::Series);
        CHECK(v == doctest::Approx(ml_series({0.7, 1.0, -0.1})).epsilon(1e-13));
    }
    {
        const auto [v, m] = ml_eval({0.7, 1.0, -1e4});
        CHECK(m == MLMethod::AsymptoticSub2);
        const double oracle = ml_integral_rep(0.7, std::pow(1e4, 1.0 / 0.7));
        CHECK(std::abs(v - oracle) <= 1e-9);
    }
    CHECK_THROWS_AS(ml_eval({-1.0, 1.0, 0.0}), DomainError);
    CHECK_THROWS_AS(ml_eval({1.0, 0.0, 0.0}), DomainError);
}

TEST_CASE("derivative identity residual") {
    CHECK(ml_deriv_identity_residual(1.0, -1.0, 1e-5) <= 1e-8);
    CHECK(ml_deriv_identity_residual(0.5, -0.5, 1e-5) <= 1e-6);
    {
        // E_{2,2}(-4) = sin(2)/2 cross-check of the left-hand side
        CHECK(ml_eval({2.0, 2.0, -4.0}).first ==
              doctest::Approx(0.5 * std::sin(2.0)).epsilon(1e-13));
        CHECK(ml_deriv_identity_residual(2.0, -4.0, 1e-5) <= 1e-6);
    }
}

TEST_CASE("normalization at zero argument") {
    for (double alpha : {0.15, 0.7, 1.0, 2.5, 4.0})
        for (double beta : {0.2, 1.0, 3.1}) {
            const double want = std::exp(-log_gamma(beta));
            CHECK(ml_eval({alpha, beta, 0.0}).first == doctest::Approx(want).epsilon(1e-15));
        }
}

TEST_CASE("closed forms agree with independent routes on a grid") {
    for (double alpha : {1.0, 2.0, 3.0, 4.0}) {
        double worst = 0.0;
        for (int i = 1; i < 25; ++i) {
            const double x = 20.0 * i / 24.0;
            const double z = std::pow(x, alpha);
            auto s = detail::ml_series_scan(alpha, 1.0, -z, 1e-16, 500);
            double routed;
            if (s.converged && s.err_est <= 1e-9 * (1.0 + std::abs(s.value)))
                routed = s.value;
            else
                routed = detail::ml_asym_neg(alpha, 1.0, z).value;
            const double closed = ml_eval({alpha, 1.0, -z}).first; // ClosedForm route
            worst = std::max(worst, std::abs(routed - closed));
        }
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("sampled complete monotonicity for alpha <= 1") {
    for (double alpha : {0.3, 0.6, 1.0}) {
        double prev = 0.0, prev2 = 0.0;
        for (int i = 0; i <= 50; ++i) {
            const double v = ml_eval({alpha, 1.0, -static_cast<double>(i)}).first;
            CHECK(v > 0.0);
            if (i >= 1) CHECK(v - prev <= 1e-12);
            if (i >= 2) CHECK(v - 2.0 * prev + prev2 >= -1e-10);
            CHECK(ml_eval({alpha, alpha, -static_cast<double>(i)}).first >= -1e-10);
            prev2 = prev;
            prev = v;
        }
    }
}

TEST_CASE("dispatcher methods agree on overlap points") {
    // series vs integral representation
    for (auto [alpha, z] : {std::pair{0.6, 3.0}, {1.0, 4.0}, {1.2, 4.0}, {1.7, 5.0}}) {
        const double a = ml_series({alpha, 1.0, -z});
        const double b = ml_integral_rep(alpha, std::pow(z, 1.0 / alpha));
        CHECK(std::abs(a - b) <= 1e-7);
    }
    // series vs asymptotics
    for (auto [alpha, z] : {std::pair{1.2, 40.0}, {1.5, 70.0}, {2.5, 1500.0}}) {
        const double a = detail::ml_series_scan(alpha, 1.0, -z, 1e-16, 500).value;
        const double b = detail::ml_asym_neg(alpha, 1.0, z).value;
        CHECK(std::abs(a - b) <= 1e-7);
    }
    // asymptotics vs integral representation
    for (auto [alpha, z] : {std::pair{0.5, 8.0}, {0.7, 12.0}, {0.3, 5.0}}) {
        const double a = detail::ml_asym_neg(alpha, 1.0, z).value;
        const double b = ml_integral_rep(alpha, std::pow(z, 1.0 / alpha));
        CHECK(std::abs(a - b) <= 1e-7);
    }
}

TEST_CASE("E_{alpha,alpha} sine-kernel representation matches the series") {
    for (auto [alpha, z] : {std::pair{0.8, 3.0}, {1.4, 5.0}, {0.5, 2.0}}) {
        QuadConfig cfg;
        cfg.abs_tol = 1e-11;
        const double a = detail::ml_integral_rep_aa(alpha, std::pow(z, 1.0 / alpha), cfg);
        const double b = static_cast<double>(
            series_ref(static_cast<long double>(alpha), static_cast<long double>(alpha),
                       static_cast<long double>(-z)));
        CHECK(std::abs(a - b) <= 1e-8);
    }
}

TEST_CASE("positive arguments") {
    CHECK(ml_eval({1.0, 1.0, 3.0}).first == doctest::Approx(std::exp(3.0)).epsilon(1e-13));
    CHECK(ml_eval({2.0, 1.0, 9.0}).first == doctest::Approx(std::cosh(3.0)).epsilon(1e-13));
    // large positive argument goes through the exponential asymptotics
    const double v = ml_eval({0.8, 1.0, 30.0}).first;
    const double lead = std::exp(std::pow(30.0, 1.25)) / 0.8;
    CHECK(v == doctest::Approx(lead).epsilon(1e-3));
}
