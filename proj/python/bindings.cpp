#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/mittag_leffler.hpp"
#include "fracgreen/verify.hpp"
#include "fracgreen/zeros.hpp"

namespace py = pybind11;
using namespace fracgreen;

PYBIND11_MODULE(_fracgreen, m) {
    m.doc() = "Green's function of c + (-Laplacian)^(alpha/2) on the periodic domain";

    static py::exception<Error> exc(m, "FracgreenError");
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const Error& e) {
            exc(e.what());
        }
    });

    // Mittag-Leffler
    m.def(
        "ml_eval",
        [](double alpha, double beta, double x) {
            const auto [v, method] = ml_eval({alpha, beta, x});
            return py::make_tuple(v, to_string(method));
        },
        py::arg("alpha"), py::arg("beta"), py::arg("x"),
        "E_{alpha,beta}(x); returns (value, method)");
    m.def(
        "ml_series",
        [](double alpha, double beta, double x, double abs_tol, long max_terms) {
            return ml_series({alpha, beta, x}, {abs_tol, max_terms});
        },
        py::arg("alpha"), py::arg("beta"), py::arg("x"), py::arg("abs_tol") = 1e-14,
        py::arg("max_terms") = 400);
    m.def("ml_asymptotic_sub2", &ml_asymptotic_sub2, py::arg("alpha"), py::arg("x"),
          py::arg("n_terms"));
    m.def("ml_asymptotic_sup2", &ml_asymptotic_sup2, py::arg("alpha"), py::arg("x"));
    m.def(
        "ml_integral_rep", [](double alpha, double x) { return ml_integral_rep(alpha, x); },
        py::arg("alpha"), py::arg("x"), "E_alpha(-x^alpha) through the cos-kernel integral");
    m.def("ml_deriv_identity_residual", &ml_deriv_identity_residual, py::arg("alpha"),
          py::arg("x"), py::arg("h") = 1e-5);

    // Green's function
    m.def(
        "green_fourier",
        [](double c, double alpha, double x, double abs_tol) {
            return green_fourier({c, alpha}, x, {abs_tol, kGreenSeriesDefaults.max_terms});
        },
        py::arg("c"), py::arg("alpha"), py::arg("x"),
        py::arg("abs_tol") = kGreenSeriesDefaults.abs_tol);
    m.def(
        "green_integral", [](double c, double alpha, double x) {
            return green_integral({c, alpha}, x);
        },
        py::arg("c"), py::arg("alpha"), py::arg("x"));
    m.def("c_alpha", &c_alpha, py::arg("alpha"));
    m.def(
        "green_at_pi",
        [](double c, double alpha, const std::string& method) {
            PiMethod pm;
            if (method == "series") pm = PiMethod::Series;
            else if (method == "ml-integral") pm = PiMethod::MLIntegral;
            else if (method == "csch") pm = PiMethod::Csch;
            else throw DomainError("green_at_pi: method must be series|ml-integral|csch");
            return green_at_pi({c, alpha}, pm);
        },
        py::arg("c"), py::arg("alpha"), py::arg("method") = "series");
    m.def("green_closed_alpha2", &green_closed_alpha2, py::arg("c"), py::arg("x"));
    m.def("green_closed_alpha4", &green_closed_alpha4, py::arg("c"), py::arg("x"));
    m.def("green_deriv_alpha4", &green_deriv_alpha4, py::arg("c"), py::arg("x"));
    m.def(
        "green_deriv_integral", [](double c, double alpha, double x) {
            return green_deriv_integral({c, alpha}, x);
        },
        py::arg("c"), py::arg("alpha"), py::arg("x"));
    m.def(
        "profile",
        [](double c, double alpha, const std::vector<double>& grid, const std::string& method,
           int threads) {
            MethodPolicy policy = MethodPolicy::Auto;
            if (method == "fourier") policy = MethodPolicy::Fourier;
            else if (method == "integral") policy = MethodPolicy::Integral;
            else if (method == "closed") policy = MethodPolicy::Closed;
            else if (method != "auto") throw DomainError("profile: unknown method " + method);
            std::vector<std::pair<double, double>> out;
            for (const auto& s : profile({c, alpha}, grid, policy, threads))
                out.emplace_back(s.x, s.g);
            return out;
        },
        py::arg("c"), py::arg("alpha"), py::arg("grid"), py::arg("method") = "auto",
        py::arg("threads") = 1, "Returns [(x, G)]; singular samples carry NaN");

    // zeros
    py::class_<ZeroRecord>(m, "ZeroRecord")
        .def_readonly("index", &ZeroRecord::index)
        .def_readonly("alpha", &ZeroRecord::alpha)
        .def_readonly("c", &ZeroRecord::c)
        .def_readonly("bracket_lo", &ZeroRecord::bracket_lo)
        .def_readonly("bracket_hi", &ZeroRecord::bracket_hi)
        .def("__repr__", [](const ZeroRecord& r) {
            return "ZeroRecord(index=" + std::to_string(r.index) +
                   ", alpha=" + std::to_string(r.alpha) + ", c=" + std::to_string(r.c) + ")";
        });
    m.def("scan_pi_zeros", &scan_pi_zeros, py::arg("alpha"), py::arg("c_max"),
          py::arg("n_grid") = 400, py::arg("tol") = 1e-9);
    m.def("default_scan_cmax", &default_scan_cmax, py::arg("alpha"));
    m.def(
        "transcendental_roots_alpha4",
        [](int n_max) { return transcendental_roots_alpha4(n_max); }, py::arg("n_max"),
        "Roots (a_n, c_n) of tanh(pi a) + tan(pi a) = 0");
    m.def(
        "I_ab", [](double a, double b) { return I_ab({a, b}); }, py::arg("a"), py::arg("b"));
    m.def(
        "I_ab_split", [](double a, double b) { return I_ab_split({a, b}); }, py::arg("a"),
        py::arg("b"));
    m.def(
        "I1_asym", [](double a, double b) { return I1_asym({a, b}); }, py::arg("a"),
        py::arg("b"));
    m.def(
        "I2_asym", [](double a, double b) { return I2_asym({a, b}); }, py::arg("a"),
        py::arg("b"));
    m.def(
        "predict_first_zero",
        [](double alpha) {
            const auto p = predict_first_zero(alpha);
            return py::make_tuple(p.c_root, p.c_loglaw);
        },
        py::arg("alpha"), "Returns (implicit-equation root, squared-log law estimate)");

    // verification
    m.def(
        "verify",
        [](const std::string& suite) {
            py::list out;
            for (const auto& r : verify_suite(suite))
                out.append(py::make_tuple(r.name, r.pass, r.worst, r.tol));
            return out;
        },
        py::arg("suite") = "all", "Run an invariant suite; returns [(name, pass, worst, tol)]");
}
