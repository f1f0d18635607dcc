#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracgreen/errors.hpp"
#include "fracgreen/green.hpp"
#include "fracgreen/mittag_leffler.hpp"
#include "fracgreen/parallel.hpp"
#include "fracgreen/verify.hpp"
#include "fracgreen/zeros.hpp"

namespace {

using json = nlohmann::json;
using std::numbers::pi;

struct OutputSpec {
    std::string format = "csv";
    std::string path;       // empty = stdout
    int precision = 12;     // significant decimal digits
    bool provenance = false;
};

struct Table {
    std::vector<std::string> cols;
    std::vector<std::vector<json>> rows;
};

std::string fmt_sci(double v, int precision) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*e", precision - 1, v);
    return buf;
}

std::string cell_text(const json& v, int precision) {
    if (v.is_null()) return "";
    if (v.is_number_float()) return fmt_sci(v.get<double>(), precision);
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void write_csv(const Table& t, int precision, std::ostream& os) {
    for (std::size_t j = 0; j < t.cols.size(); ++j)
        os << t.cols[j] << (j + 1 < t.cols.size() ? "," : "");
    os << "\n";
    for (const auto& row : t.rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
            os << cell_text(row[j], precision) << (j + 1 < row.size() ? "," : "");
        os << "\n";
    }
}

void write_json(const Table& t, std::ostream& os) {
    json arr = json::array();
    for (const auto& row : t.rows) {
        json obj = json::object();
        for (std::size_t j = 0; j < row.size(); ++j) obj[t.cols[j]] = row[j];
        arr.push_back(std::move(obj));
    }
    os << arr.dump(2) << "\n";
}

void emit(const Table& t, const OutputSpec& spec, const json& provenance) {
    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!spec.path.empty()) {
        file.open(spec.path);
        if (!file) throw fracgreen::Error("cannot open output file: " + spec.path);
        os = &file;
    }
    if (spec.format == "json")
        write_json(t, *os);
    else
        write_csv(t, spec.precision, *os);
    if (spec.provenance) {
        const std::string side =
            spec.path.empty() ? "fracgreen.provenance.json" : spec.path + ".provenance.json";
        std::ofstream p(side);
        if (!p) throw fracgreen::Error("cannot open provenance file: " + side);
        p << provenance.dump(2) << "\n";
    }
}

struct Range {
    double lo, hi;
    int count;
    std::vector<double> points() const {
        std::vector<double> g(count);
        for (int i = 0; i < count; ++i)
            g[i] = count == 1 ? lo : lo + (hi - lo) * i / (count - 1.0);
        return g;
    }
};

Range parse_range(const std::string& s) {
    Range r{};
    const auto p1 = s.find(':'), p2 = s.find(':', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos)
        throw CLI::ValidationError("range", "expected lo:hi:count, got '" + s + "'");
    try {
        r.lo = std::stod(s.substr(0, p1));
        r.hi = std::stod(s.substr(p1 + 1, p2 - p1 - 1));
        r.count = std::stoi(s.substr(p2 + 1));
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "cannot parse '" + s + "' as lo:hi:count");
    }
    if (r.count < 1 || !(r.lo <= r.hi))
        throw CLI::ValidationError("range", "need lo <= hi and count >= 1 in '" + s + "'");
    return r;
}

void add_output_opts(CLI::App* cmd, OutputSpec& spec) {
    cmd->add_option("--format", spec.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("-o,--output", spec.path, "Output path (default: stdout)");
    cmd->add_option("--precision", spec.precision, "Significant decimal digits")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    cmd->add_flag("--provenance", spec.provenance,
                  "Write a JSON sidecar with the settings and grids used");
}

json base_provenance(const std::string& sub, const OutputSpec& spec) {
    json j;
    j["subcommand"] = sub;
    j["format"] = spec.format;
    j["precision"] = spec.precision;
    j["threads"] = fracgreen::detail::env_threads();
    j["green_series_abs_tol"] = fracgreen::kGreenSeriesDefaults.abs_tol;
    j["quad_defaults"] = {{"abs_tol", 1e-10}, {"rel_tol", 0.0},
                          {"max_subdivisions", 2000}, {"tail_cutoff", 400.0}};
    return j;
}

int run_ml(double alpha, double beta, const std::vector<double>& xs,
           const std::optional<std::string>& xrange, const OutputSpec& spec) {
    if (xs.empty() && !xrange)
        throw fracgreen::DomainError("ml: need --x values or an --x-range");
    Table t;
    t.cols = {"x", "value", "method"};
    json prov = base_provenance("ml", spec);
    prov["alpha"] = alpha;
    prov["beta"] = beta;
    auto push = [&](double x, double arg) {
        const auto [v, m] = fracgreen::ml_eval({alpha, beta, arg});
        t.rows.push_back({x, v, fracgreen::to_string(m)});
    };
    for (double x : xs) push(x, x);
    if (xrange) {
        const Range r = parse_range(*xrange);
        if (r.lo < 0.0)
            throw fracgreen::DomainError("ml: --x-range sweeps E(-x^alpha) and needs x >= 0");
        prov["x_range"] = *xrange;
        for (double x : r.points()) push(x, -std::pow(x, alpha)); // sweep of E(-x^alpha)
    }
    emit(t, spec, prov);
    return 0;
}

int run_profile(double c, double alpha, int n, const std::string& method,
                const OutputSpec& spec) {
    if (n < 2) throw fracgreen::DomainError("profile: need at least 2 points");
    fracgreen::MethodPolicy policy = fracgreen::MethodPolicy::Auto;
    if (method == "fourier") policy = fracgreen::MethodPolicy::Fourier;
    else if (method == "integral") policy = fracgreen::MethodPolicy::Integral;
    else if (method == "closed") policy = fracgreen::MethodPolicy::Closed;

    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i) grid[i] = -pi + 2.0 * pi * i / (n - 1.0);
    const auto samples =
        fracgreen::profile({c, alpha}, grid, policy, fracgreen::detail::env_threads());

    Table t;
    t.cols = {"x", "G"};
    for (const auto& s : samples) {
        if (std::isfinite(s.g))
            t.rows.push_back({s.x, s.g});
        else
            t.rows.push_back({s.x, nullptr});
    }
    json prov = base_provenance("profile", spec);
    prov["c"] = c;
    prov["alpha"] = alpha;
    prov["n"] = n;
    prov["method"] = method;
    emit(t, spec, prov);
    return 0;
}

int run_pi_error(double alpha, const std::string& crange, const OutputSpec& spec) {
    if (!(alpha > 2.0))
        throw fracgreen::DomainError("pi-error: alpha must be > 2");
    const Range r = parse_range(crange);
    const double ca = fracgreen::c_alpha(alpha);
    Table t;
    t.cols = {"c", "abs_diff", "within_c_alpha"};
    for (double c : r.points()) {
        if (!(c > 0.0)) continue;
        if (c < ca) {
            const double gs = fracgreen::green_at_pi({c, alpha}, fracgreen::PiMethod::Series);
            try {
                const double gi =
                    fracgreen::green_at_pi({c, alpha}, fracgreen::PiMethod::MLIntegral);
                t.rows.push_back({c, std::abs(gs - gi), 1});
            } catch (const fracgreen::TailNotResolved&) {
                // valid but too close to c_alpha for the truncation cutoff
                t.rows.push_back({c, nullptr, 1});
            }
        } else {
            t.rows.push_back({c, nullptr, 0}); // flagged, integral route not forced
        }
    }
    json prov = base_provenance("pi-error", spec);
    prov["alpha"] = alpha;
    prov["c_range"] = crange;
    prov["c_alpha"] = ca;
    emit(t, spec, prov);
    return 0;
}

int run_zeros(const std::optional<double>& alpha, const std::optional<std::string>& arange,
              double c_max, int n_grid, double tol, int k_max, bool alpha4_check,
              const OutputSpec& spec) {
    json prov = base_provenance("zeros", spec);
    prov["c_max"] = c_max;
    prov["n_grid"] = n_grid;
    prov["tol"] = tol;
    prov["k_max"] = k_max;
    Table t;
    if (alpha && arange)
        throw fracgreen::DomainError("zeros: give either --alpha or --alpha-range, not both");
    if (alpha) {
        const double a = *alpha;
        if (!(a > 2.0)) throw fracgreen::DomainError("zeros: alpha must be > 2");
        const double cm = c_max > 0.0 ? c_max : fracgreen::default_scan_cmax(a);
        prov["c_max_effective"] = cm;
        prov["alpha"] = a;
        auto roots = fracgreen::scan_pi_zeros(a, cm, n_grid, tol);
        if (static_cast<int>(roots.size()) > k_max) roots.resize(k_max);
        if (alpha4_check) {
            if (std::abs(a - 4.0) > 1e-12)
                throw fracgreen::DomainError("zeros: --alpha4-check requires --alpha 4");
            const auto tr =
                fracgreen::transcendental_roots_alpha4(static_cast<int>(roots.size()));
            t.cols = {"index", "c", "bracket_lo", "bracket_hi", "a_n", "c_transcendental",
                      "abs_diff"};
            for (std::size_t k = 0; k < roots.size(); ++k)
                t.rows.push_back({roots[k].index, roots[k].c, roots[k].bracket_lo,
                                  roots[k].bracket_hi, tr[k].first, tr[k].second,
                                  std::abs(roots[k].c - tr[k].second)});
        } else {
            t.cols = {"index", "c", "bracket_lo", "bracket_hi"};
            for (const auto& rec : roots)
                t.rows.push_back({rec.index, rec.c, rec.bracket_lo, rec.bracket_hi});
        }
    } else if (arange) {
        const Range r = parse_range(*arange);
        prov["alpha_range"] = *arange;
        const auto curves = fracgreen::zero_curves(r.lo, r.hi, r.count, k_max, c_max,
                                                   fracgreen::detail::env_threads());
        t.cols = {"alpha", "index", "c"};
        // rows ordered by alpha, then root index
        std::vector<std::tuple<double, int, double>> rows;
        for (const auto& curve : curves)
            for (const auto& [a, c] : curve.points) rows.emplace_back(a, curve.index, c);
        std::sort(rows.begin(), rows.end());
        for (const auto& [a, k, c] : rows) t.rows.push_back({a, k, c});
    } else {
        throw fracgreen::DomainError("zeros: need --alpha or --alpha-range");
    }
    emit(t, spec, prov);
    return 0;
}

int run_verify(const std::string& suite) {
    const auto results = fracgreen::verify_suite(suite);
    bool all_pass = true;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        std::printf("[%s] %-55s worst=%.3e tol=%.3e\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.worst, r.tol);
    }
    std::printf("%zu properties, %s\n", results.size(), all_pass ? "all passed" : "FAILURES");
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Green's function of c + (-Laplacian)^(alpha/2) on [-pi, pi]"};
    app.require_subcommand(1);

    // ml
    double ml_alpha = 1.0, ml_beta = 1.0;
    std::vector<double> ml_x;
    std::optional<std::string> ml_xrange;
    OutputSpec ml_out;
    auto* ml = app.add_subcommand("ml", "Evaluate the Mittag-Leffler function E_{alpha,beta}");
    ml->add_option("--alpha", ml_alpha, "Order alpha > 0")->required();
    ml->add_option("--beta", ml_beta, "Second parameter beta > 0")->capture_default_str();
    ml->add_option("--x", ml_x, "Argument(s), evaluated as E_{alpha,beta}(x)");
    ml->add_option("--x-range", ml_xrange,
                   "lo:hi:count sweep of E_{alpha,beta}(-x^alpha) over x in [lo,hi]");
    add_output_opts(ml, ml_out);

    // profile
    double pr_c = 1.0, pr_alpha = 2.0;
    int pr_n = 401;
    std::string pr_method = "auto";
    OutputSpec pr_out;
    auto* pr = app.add_subcommand("profile", "Sample G(x) on a uniform grid of [-pi, pi]");
    pr->add_option("--c", pr_c, "Parameter c > 0")->required();
    pr->add_option("--alpha", pr_alpha, "Order alpha > 0")->required();
    pr->add_option("--n", pr_n, "Number of grid points (>= 2)")->capture_default_str();
    pr->add_option("--method", pr_method, "Evaluation method")
        ->check(CLI::IsMember({"auto", "fourier", "integral", "closed"}))
        ->capture_default_str();
    add_output_opts(pr, pr_out);

    // pi-error
    double pe_alpha = 2.5;
    std::string pe_crange;
    OutputSpec pe_out;
    auto* pe = app.add_subcommand(
        "pi-error", "Difference between the series and ML-integral values of G(pi) over c");
    pe->add_option("--alpha", pe_alpha, "Order alpha > 2")->required();
    pe->add_option("--c-range", pe_crange, "lo:hi:count grid in c")->required();
    add_output_opts(pe, pe_out);

    // zeros
    std::optional<double> z_alpha;
    std::optional<std::string> z_arange;
    double z_cmax = 0.0, z_tol = 1e-9;
    int z_ngrid = 400, z_kmax = 5;
    bool z_check4 = false;
    OutputSpec z_out;
    auto* zr = app.add_subcommand("zeros", "Locate zeros of c -> G(pi; c, alpha)");
    zr->add_option("--alpha", z_alpha, "Single order alpha > 2");
    zr->add_option("--alpha-range", z_arange, "lo:hi:count sweep over alpha in (2,4]");
    zr->add_option("--c-max", z_cmax, "Scan ceiling in c (0 = adaptive default)")
        ->capture_default_str();
    zr->add_option("--n-grid", z_ngrid, "Scan grid size")->capture_default_str();
    zr->add_option("--tol", z_tol, "Bisection bracket width")->capture_default_str();
    zr->add_option("--k-max", z_kmax, "Track at most this many roots")->capture_default_str();
    zr->add_flag("--alpha4-check", z_check4,
                 "Append the transcendental-equation comparison (alpha = 4)");
    add_output_opts(zr, z_out);

    // verify
    std::string v_suite = "all";
    auto* vf = app.add_subcommand("verify", "Run the invariant suites");
    vf->add_option("suite", v_suite, "ml | green | zeros | asymptotics | all")
        ->check(CLI::IsMember({"ml", "green", "zeros", "asymptotics", "all"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (ml->parsed()) return run_ml(ml_alpha, ml_beta, ml_x, ml_xrange, ml_out);
        if (pr->parsed()) return run_profile(pr_c, pr_alpha, pr_n, pr_method, pr_out);
        if (pe->parsed()) return run_pi_error(pe_alpha, pe_crange, pe_out);
        if (zr->parsed())
            return run_zeros(z_alpha, z_arange, z_cmax, z_ngrid, z_tol, z_kmax, z_check4, z_out);
        if (vf->parsed()) return run_verify(v_suite);
    } catch (const fracgreen::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
