#pragma once

#include <utility>
#include <vector>

#include "fracgreen/quadrature.hpp"

namespace fracgreen {

struct ZeroRecord {
    int index;    // 1-based, ordered by increasing c
    double alpha;
    double c;
    double bracket_lo, bracket_hi; // final bisection bracket (lo == hi when exact)
};

struct OscIntegralParams {
    double a; // growth rate c^(1/alpha) cos(pi/alpha); must be < 1
    double b; // oscillation rate c^(1/alpha) sin(pi/alpha); >= 0
    void validate() const;
};

struct RootCurve {
    int index;
    std::vector<std::pair<double, double>> points; // (alpha, c)
};

struct FirstZeroPrediction {
    double c_root;   // root of a(c) = 4 pi b(c)^3 exp(-pi b(c))
    double c_loglaw; // (1/pi^2) ln^2((alpha-2)/16)
};

// Bracket every sign change of c -> G(pi; c, alpha) on a log-spaced grid of
// (0, c_max] and refine each bracket by bisection to width <= tol. A grid
// value with |G| < 1e-13 counts as an exact root (degenerate bracket).
std::vector<ZeroRecord> scan_pi_zeros(double alpha, double c_max, int n_grid = 400,
                                      double tol = 1e-9);

// Default scan ceiling; clears the fifth root at alpha = 4 (c ~ 2e3).
double default_scan_cmax(double alpha);

// Root locations on the (c, alpha) plane, assembled into per-index curves;
// curves terminate where roots disappear. c_max <= 0 selects the default
// scan ceiling (which must clear the highest tracked root).
std::vector<RootCurve> zero_curves(double alpha_lo, double alpha_hi, int n_alpha, int k_max,
                                   double c_max = 0.0, int threads = 1);

// Boundary alpha* below which the two adjacent roots disappear together,
// refined by bisection in alpha to width tol. Throws CurvesDisjoint when
// the curves never coexist or do not actually merge at the boundary.
double coalescence_alpha(const RootCurve& curve_i, const RootCurve& curve_j, double tol = 4e-3);

// Roots a_n of tanh(pi a) + tan(pi a) = 0 in (n - 1/4, n), paired with
// c_n = 4 a_n^4.
std::vector<std::pair<double, double>> transcendental_roots_alpha4(int n_max, double tol = 1e-13);

// I(a,b) = int_0^inf sech^2(t/2) e^(a t) cos(b t) dt, and its split into
// the cosh (I1) and sinh (I2) parts.
double I_ab(const OscIntegralParams& p, const QuadConfig& cfg = {});
std::pair<double, double> I_ab_split(const OscIntegralParams& p, const QuadConfig& cfg = {});

// Leading-order forms of the two parts for large b.
double I1_asym(const OscIntegralParams& p);
double I2_asym(const OscIntegralParams& p);

// First-zero location predicted by the vanishing of I(a,b), solved by
// bisection in c on [1, 1e6], plus the squared-log limiting law.
FirstZeroPrediction predict_first_zero(double alpha);

} // namespace fracgreen
