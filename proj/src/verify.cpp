#include "fracgreen/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/mittag_leffler.hpp"
#include "fracgreen/special.hpp"
#include "fracgreen/zeros.hpp"

namespace fracgreen {

namespace {

using std::numbers::pi;

struct Prop {
    std::string name;
    double tol;
    double worst = 0.0;
    void update(double r) { worst = std::max(worst, r); }
    PropertyResult done() const { return {name, worst <= tol, worst, tol}; }
};

double viol(double x) { return std::max(0.0, x); }

// E_alpha(-z) through a route other than the closed form
double ml_routed_neg(double alpha, double z) {
    auto s = detail::ml_series_scan(alpha, 1.0, -z, 1e-16, 500);
    if (s.converged && s.err_est <= 1e-9 * (1.0 + std::abs(s.value))) return s.value;
    auto a = detail::ml_asym_neg(alpha, 1.0, z);
    if (a.usable && a.err_est <= 1e-9 * (1.0 + std::abs(a.value))) return a.value;
    return ml_integral_rep(alpha, std::pow(z, 1.0 / alpha));
}

double ml_closed_neg(double alpha, double z) {
    if (alpha == 1.0) return std::exp(-z);
    if (alpha == 2.0) return std::cos(std::sqrt(z));
    const double x = std::pow(z, 1.0 / alpha);
    if (alpha == 3.0)
        return std::exp(-x) / 3.0 +
               2.0 / 3.0 * std::exp(0.5 * x) * std::cos(0.5 * std::sqrt(3.0) * x);
    const double u = x / std::numbers::sqrt2;
    return std::cos(u) * std::cosh(u);
}

std::vector<PropertyResult> suite_ml() {
    std::vector<PropertyResult> out;

    {
        Prop p{"ml/normalization E(0)=1/Gamma(beta)", 1e-15};
        for (double alpha : {0.15, 0.5, 1.0, 2.2, 4.0})
            for (double beta : {0.12, 0.5, 1.0, 2.5, 4.0}) {
                const double want = std::exp(-log_gamma(beta));
                p.update(std::abs(ml_eval({alpha, beta, 0.0}).first - want));
            }
        out.push_back(p.done());
    }
    {
        Prop p{"ml/closed-form agreement alpha in {1,2,3,4}", 1e-8};
        for (double alpha : {1.0, 2.0, 3.0, 4.0})
            for (int i = 1; i < 50; ++i) {
                const double x = 20.0 * i / 49.0;
                const double z = std::pow(x, alpha);
                p.update(std::abs(ml_routed_neg(alpha, z) - ml_closed_neg(alpha, z)));
            }
        out.push_back(p.done());
    }
    {
        Prop pos{"ml/complete-monotonicity positivity", 0.0};
        Prop dec{"ml/complete-monotonicity first difference", 1e-12};
        Prop cvx{"ml/complete-monotonicity second difference", 1e-10};
        Prop eaa{"ml/E_aa nonnegative (alpha<=1)", 1e-10};
        for (double alpha : {0.3, 0.6, 1.0}) {
            std::vector<double> v(51);
            for (int i = 0; i <= 50; ++i) {
                v[i] = ml_eval({alpha, 1.0, -static_cast<double>(i)}).first;
                pos.update(viol(-v[i]));
                eaa.update(viol(-ml_eval({alpha, alpha, -static_cast<double>(i)}).first));
            }
            for (int i = 0; i + 1 <= 50; ++i) dec.update(viol(v[i + 1] - v[i]));
            for (int i = 0; i + 2 <= 50; ++i) cvx.update(viol(-(v[i + 2] - 2 * v[i + 1] + v[i])));
        }
        out.push_back(pos.done());
        out.push_back(dec.done());
        out.push_back(cvx.done());
        out.push_back(eaa.done());
    }
    {
        Prop p{"ml/consistency series vs integral rep", 1e-7};
        const std::pair<double, double> pts[] = {{0.6, 3.0}, {1.0, 4.0}, {1.2, 4.0}, {1.7, 5.0}};
        for (auto [alpha, z] : pts)
            p.update(std::abs(ml_series({alpha, 1.0, -z}) -
                              ml_integral_rep(alpha, std::pow(z, 1.0 / alpha))));
        out.push_back(p.done());
    }
    {
        Prop p{"ml/consistency series vs asymptotics", 1e-7};
        const std::pair<double, double> pts[] = {{1.2, 40.0}, {1.5, 70.0}, {2.5, 1500.0}};
        for (auto [alpha, z] : pts) {
            auto s = detail::ml_series_scan(alpha, 1.0, -z, 1e-16, 500);
            auto a = detail::ml_asym_neg(alpha, 1.0, z);
            p.update(std::abs(s.value - a.value));
        }
        out.push_back(p.done());
    }
    {
        Prop p{"ml/consistency asymptotics vs integral rep", 1e-7};
        const std::pair<double, double> pts[] = {{0.5, 8.0}, {0.7, 12.0}, {0.3, 5.0}};
        for (auto [alpha, z] : pts) {
            auto a = detail::ml_asym_neg(alpha, 1.0, z);
            p.update(std::abs(a.value - ml_integral_rep(alpha, std::pow(z, 1.0 / alpha))));
        }
        out.push_back(p.done());
    }
    {
        Prop p{"ml/derivative identity residual", 1e-5};
        for (double alpha : {0.3, 0.8, 1.2, 1.7})
            for (double x : {-0.5, -2.0, -8.0, -25.0})
                p.update(ml_deriv_identity_residual(alpha, x, 1e-5));
        out.push_back(p.done());
    }
    return out;
}

std::vector<PropertyResult> suite_green() {
    std::vector<PropertyResult> out;

    {
        Prop p{"green/evenness G(-x)=G(x)", 0.0};
        const GreenParams gp{1.3, 1.4};
        for (double x : {0.3, 1.1, 2.0, 3.0})
            p.update(std::abs(green_fourier(gp, -x) - green_fourier(gp, x)));
        out.push_back(p.done());
    }
    {
        Prop p{"green/cross-method fourier vs integral", 1e-7};
        auto sweep = [&](double c, double alpha) {
            const GreenParams gp{c, alpha};
            for (int i = 1; i <= 20; ++i) {
                const double x = pi * i / 20.0;
                p.update(std::abs(green_fourier(gp, x) - green_integral(gp, x)));
            }
        };
        for (double c : {0.5, 1.0, 5.0})
            for (double alpha : {0.5, 1.0, 1.5, 2.0}) sweep(c, alpha);
        for (double alpha : {2.5, 3.5})
            for (double c : {1.0, 2.0}) sweep(c, alpha); // below c_alpha
        out.push_back(p.done());
    }
    {
        Prop pos{"green/profile positivity (alpha<=2)", 0.0};
        Prop dec{"green/profile monotone decrease (alpha<=2)", 1e-12};
        for (double c : {0.5, 1.0, 5.0})
            for (double alpha : {0.5, 1.0, 1.5, 2.0}) {
                const GreenParams gp{c, alpha};
                double prev = 0.0;
                for (int i = 1; i <= 200; ++i) {
                    const double x = pi * i / 200.0;
                    const double g = green_fourier(gp, x);
                    pos.update(viol(-g));
                    if (i > 1) dec.update(viol(g - prev));
                    prev = g;
                }
            }
        out.push_back(pos.done());
        out.push_back(dec.done());
    }
    {
        Prop p{"green/G(pi) < G(0) for alpha > 1", 0.0};
        for (double alpha : {1.2, 1.5, 2.0, 2.5, 3.0, 4.0})
            for (double c : {0.5, 2.0, 10.0}) {
                const GreenParams gp{c, alpha};
                p.update(viol(green_fourier(gp, pi) - green_fourier(gp, 0.0)));
            }
        out.push_back(p.done());
    }
    {
        Prop p{"green/periodization at alpha=2", 0.0};
        for (double c : {0.25, 1.0, 4.0})
            for (double x : {0.0, 1.0, 0.5 * pi, 3.0, pi}) {
                const double rc = std::sqrt(c);
                const int K = 4;
                detail::CompensatedSum s;
                for (int n = -K; n <= K; ++n)
                    s.add(std::exp(-rc * std::abs(x - 2.0 * pi * n)) / (2.0 * rc));
                const double bound = 3.0 * std::exp(-rc * pi * (2.0 * K - 1)) / (2.0 * rc) + 3e-12;
                p.update(viol(std::abs(s.value() - green_closed_alpha2(c, x)) - bound));
            }
        out.push_back(p.done());
    }
    {
        Prop p{"green/fourier tail honesty", 1e-10};
        SeriesControl loose{1e-10, 400000}, tight{1e-13, 400000};
        for (double c : {0.5, 5.0})
            for (double alpha : {1.5, 2.5, 4.0})
                for (double x : {0.0, 0.4, 1.7, pi}) {
                    const GreenParams gp{c, alpha};
                    p.update(std::abs(green_fourier(gp, x, loose) - green_fourier(gp, x, tight)));
                }
        out.push_back(p.done());
    }
    return out;
}

std::vector<PropertyResult> suite_zeros() {
    std::vector<PropertyResult> out;

    {
        Prop p{"zeros/bracket sign change", 0.0};
        for (double alpha : {2.5, 4.0}) {
            const PiSeriesEvaluator G(alpha);
            for (const auto& r : scan_pi_zeros(alpha, 60.0, 400, 1e-9)) {
                if (r.bracket_lo == r.bracket_hi) {
                    p.update(viol(std::abs(G(r.c)) - 1e-13));
                    continue;
                }
                p.update(viol(r.bracket_lo - r.c));
                p.update(viol(r.c - r.bracket_hi));
                p.update(viol(G(r.bracket_lo) * G(r.bracket_hi)));
            }
        }
        out.push_back(p.done());
    }
    {
        Prop p{"zeros/alpha=4 bisection vs transcendental (3 roots)", 1e-5};
        const auto scan = scan_pi_zeros(4.0, 300.0, 600, 1e-11);
        const auto tr = transcendental_roots_alpha4(3);
        for (int k = 0; k < 3; ++k)
            p.update(std::abs(scan[k].c - tr[k].second));
        out.push_back(p.done());
    }
    {
        Prop in{"zeros/first root inside (0, c_alpha)", 0.0};
        Prop above{"zeros/higher roots above c_alpha", 0.0};
        for (double alpha : {2.1, 2.3, 2.5, 3.0, 3.5, 4.0}) {
            const double ca = c_alpha(alpha);
            const auto roots = scan_pi_zeros(alpha, std::max(3000.0, 1.2 * ca), 600, 1e-9);
            in.update(roots.empty() ? 1.0 : viol(roots[0].c - ca));
            for (std::size_t k = 1; k < roots.size(); ++k) above.update(viol(ca - roots[k].c));
        }
        out.push_back(in.done());
        out.push_back(above.done());
    }
    {
        Prop cnt{"zeros/alpha=4 interior sign changes nondecreasing in a", 0.0};
        Prop loc{"zeros/alpha=4 interior zeros near (k-1/4)pi/a", 0.0};
        int prev_count = 0;
        for (double a : {3.0, 5.0, 8.0}) {
            const double c = 4.0 * a * a * a * a;
            const int n = 4000;
            int count = 0;
            std::vector<double> zs;
            double prev = green_closed_alpha4(c, pi / n);
            for (int i = 2; i <= n - 1; ++i) {
                const double x = pi * i / n;
                const double g = green_closed_alpha4(c, x);
                if (prev * g < 0.0) {
                    ++count;
                    zs.push_back(x);
                }
                prev = g;
            }
            cnt.update(viol(prev_count - count));
            prev_count = count;
            for (std::size_t k = 0; k < zs.size(); ++k) {
                if (zs[k] >= 0.5 * pi) break;
                const double predicted = (k + 0.75) * pi / a;
                loc.update(viol(std::abs(zs[k] - predicted) - 0.05 / a));
            }
        }
        out.push_back(cnt.done());
        out.push_back(loc.done());
    }
    {
        Prop p{"zeros/alpha=4 monotonicity boundary", 0.0};
        // a = 0.4: positive and decreasing; a = 1.5: not monotone
        const double c_small = 4.0 * std::pow(0.4, 4.0), c_big = 4.0 * std::pow(1.5, 4.0);
        double prev = green_closed_alpha4(c_small, 0.0);
        bool mono_ok = prev > 0.0;
        for (int i = 1; i <= 400; ++i) {
            const double g = green_closed_alpha4(c_small, pi * i / 400.0);
            if (!(g > 0.0) || !(g < prev)) mono_ok = false;
            prev = g;
        }
        bool nonmono = false;
        prev = green_closed_alpha4(c_big, 0.0);
        for (int i = 1; i <= 400; ++i) {
            const double g = green_closed_alpha4(c_big, pi * i / 400.0);
            if (g > prev) nonmono = true;
            prev = g;
        }
        p.update(mono_ok && nonmono ? 0.0 : 1.0);
        out.push_back(p.done());
    }
    {
        Prop p{"zeros/root pair existence thresholds (coarse)", 0.0};
        // roots 2,3 present at alpha=3.45, absent at alpha=3.2
        p.update(viol(2.0 - static_cast<double>(scan_pi_zeros(3.45, 3000.0, 800, 1e-8).size())));
        p.update(viol(static_cast<double>(scan_pi_zeros(3.2, 3000.0, 800, 1e-8).size()) - 1.0));
        out.push_back(p.done());
    }
    return out;
}

std::vector<PropertyResult> suite_asymptotics() {
    std::vector<PropertyResult> out;

    {
        Prop p{"asymptotics/I(0,0) = 2", 1e-9};
        p.update(std::abs(I_ab({0.0, 0.0}) - 2.0));
        out.push_back(p.done());
    }
    {
        Prop p{"asymptotics/I2 vs -a/b^2", 0.0};
        for (double a : {0.2, 0.4})
            for (double b : {8.0, 12.0}) {
                const OscIntegralParams q{a, b};
                const double i2 = I_ab_split(q).second;
                p.update(viol(std::abs(i2 - I2_asym(q)) - 10.0 * a / std::pow(b, 4.0)));
            }
        out.push_back(p.done());
    }
    {
        Prop p{"asymptotics/I1+I2 vs I(a,b) relative", 0.1};
        for (auto [a, b] : {std::pair{0.3, 10.0}, std::pair{0.2, 8.0}}) {
            const OscIntegralParams q{a, b};
            const double full = I_ab(q);
            p.update(std::abs(full - (I1_asym(q) + I2_asym(q))) / std::abs(full));
        }
        out.push_back(p.done());
    }
    {
        Prop p{"asymptotics/first-zero prediction order & factor", 0.0};
        const double ref = scan_pi_zeros(2.5, 50.0, 400, 1e-8)[0].c;
        const double pred = predict_first_zero(2.5).c_root;
        p.update(viol(pred / ref - 2.0));
        p.update(viol(ref / pred - 2.0));
        double prev = 0.0;
        for (double alpha : {2.5, 2.35, 2.2, 2.1, 2.05}) {
            const double c = predict_first_zero(alpha).c_root;
            p.update(viol(prev - c)); // must increase as alpha decreases
            prev = c;
        }
        out.push_back(p.done());
    }
    return out;
}

} // namespace

std::vector<PropertyResult> verify_suite(const std::string& suite) {
    if (suite == "ml") return suite_ml();
    if (suite == "green") return suite_green();
    if (suite == "zeros") return suite_zeros();
    if (suite == "asymptotics") return suite_asymptotics();
    if (suite == "all") {
        std::vector<PropertyResult> all;
        for (const char* s : {"ml", "green", "zeros", "asymptotics"}) {
            auto part = verify_suite(s);
            all.insert(all.end(), part.begin(), part.end());
        }
        return all;
    }
    throw DomainError("verify_suite: unknown suite '" + suite + "'");
}

} // namespace fracgreen
