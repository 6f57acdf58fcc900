// Command-line front end: verification suites, A_0 by each route, Gamma(rho)
// and landscape sweeps.
//
// Exit status: 0 when every check passes, 1 on a failed check, 2 on a usage
// or I/O error.

#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"
#include "glcorr/landscape.hpp"
#include "glcorr/quadrature.hpp"
#include "glcorr/report.hpp"
#include "glcorr/residue.hpp"
#include "glcorr/series.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace glcorr;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

/// Raised for bad arguments that CLI11 cannot see, and for I/O failures.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n = 3;
    int m = 1;
    int max_n = 6;
    int threads = 0;
    double tol = 1e-8;
    double rho = 0.5;
    double j = 9.0 * 3.14159265358979323846;
    std::string method;
    std::string format = "text";
    std::string out;
    std::vector<double> eps;
    std::vector<double> ks{1e3, 1e4, 1e5, 1e6};
    std::optional<double> outer;
    std::optional<int> angular;
};

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw UsageError("cannot open '" + opt.out + "' for writing");
    f << text;
    f.close();
    if (!f) throw UsageError("failed writing '" + opt.out + "'");
}

std::string render(const VerificationReport& r, const std::string& format) {
    if (format == "json") return to_json_text(r);
    if (format == "csv") return to_csv(r);
    return to_text(r);
}

QuadratureSpec spec_from(const Options& opt) {
    QuadratureSpec spec;
    if (!opt.eps.empty()) spec.epsilon_schedule = opt.eps;
    if (opt.outer) spec.outer_radius = *opt.outer;
    if (opt.angular) spec.angular_samples = *opt.angular;
    spec.radial_tol = opt.tol;
    return spec;
}

int run_verify(const Options& opt) {
    const VerificationReport r = run_identity_suite(opt.max_n, opt.tol);
    emit(opt, render(r, opt.format));
    return r.all_pass() ? 0 : kExitFail;
}

int run_report(const Options& opt) {
    VerificationReport r = run_identity_suite(opt.max_n, opt.tol);
    r.append(run_quadrature_suite(opt.max_n));
    r.append(run_landscape_suite());
    emit(opt, render(r, opt.format));
    return r.all_pass() ? 0 : kExitFail;
}

struct Estimate {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
    std::vector<ExtrapolationEntry> table;
    std::optional<std::string> pi_multiple;
};

std::string render_estimate(const Options& opt, const std::string& quantity, const Estimate& e) {
    if (opt.format == "json") {
        std::string s = "{\"quantity\": \"" + quantity + "\", \"method\": \"" + opt.method +
                        "\", \"n\": " + std::to_string(opt.n) + ", \"m\": " + std::to_string(opt.m) +
                        ", \"value\": " + format_real(e.value) +
                        ", \"error_estimate\": " + format_real(e.error) +
                        ", \"evaluations\": " + std::to_string(e.evaluations);
        if (e.pi_multiple) s += ", \"pi_multiple\": \"" + *e.pi_multiple + "\"";
        s += ", \"extrapolation_table\": [";
        for (std::size_t i = 0; i < e.table.size(); ++i) {
            if (i) s += ", ";
            s += "{\"epsilon\": " + format_real(e.table[i].epsilon) +
                 ", \"value\": " + format_real(e.table[i].value) + "}";
        }
        return s + "]}\n";
    }
    if (opt.format == "csv") {
        return "quantity,method,n,m,value,error_estimate,evaluations\n" + quantity + ',' +
               opt.method + ',' + std::to_string(opt.n) + ',' + std::to_string(opt.m) + ',' +
               format_real(e.value) + ',' + format_real(e.error) + ',' +
               std::to_string(e.evaluations) + '\n';
    }
    std::string s = quantity + " = " + format_real(e.value) + " +/- " + format_real(e.error) +
                    "  (method " + opt.method + ", N=" + std::to_string(opt.n);
    if (quantity == "A0") s += ", m=" + std::to_string(opt.m);
    s += ")\n";
    for (const auto& row : e.table) {
        s += "  eps=" + format_real(row.epsilon) + "  partial=" + format_real(row.value) + '\n';
    }
    return s;
}

Estimate from_quadrature(const QuadratureResult& r, double scale) {
    Estimate e{r.value * scale, r.error_estimate * scale, r.evaluations, r.extrapolation_table, {}};
    for (auto& row : e.table) row.value *= scale;
    return e;
}

int run_a0(Options opt) {
    if (opt.method.empty()) opt.method = "closed";
    Estimate e;
    const double m4 = std::pow(static_cast<double>(opt.m), 4);
    if (opt.method == "closed") {
        const PiMultiple a0 = correlation_coefficient(opt.n, opt.m);
        e.value = a0.value();
        std::ostringstream q;
        q << a0.coefficient.numerator();
        if (a0.coefficient.denominator() != 1) q << '/' << a0.coefficient.denominator();
        e.pi_multiple = q.str();
    } else if (opt.method == "series_residue") {
        const QuadratureResult i = I_by_series(opt.n, opt.tol);
        const IntegralEstimate ii = II_by_gamma(opt.n, std::max(opt.tol, 1e-10));
        e.value = (i.value - ii.value) * m4 / 4.0;
        e.error = (i.error_estimate + ii.error) * m4 / 4.0;
        e.evaluations = i.evaluations + ii.evaluations;
    } else if (opt.method == "pv") {
        e = from_quadrature(a0_numeric(opt.n, opt.m, spec_from(opt)), 1.0);
    } else if (opt.method == "regularized") {
        QuadratureSpec spec = spec_from(opt);
        spec.use_counterterm = true;
        e = from_quadrature(regularized_integral(opt.n, opt.m, spec), 0.25);
    } else {
        throw UsageError("unknown a0 method '" + opt.method + "'");
    }
    emit(opt, render_estimate(opt, "A0", e));
    return std::abs(e.value) <= e.error ? 0 : kExitFail;
}

int run_gamma(Options opt) {
    if (opt.method.empty()) opt.method = "closed";
    if (opt.rho == 1.0) {
        const GammaJump jump = gamma_at_one(opt.n);
        throw UsageError("Gamma jumps at rho = 1: Gamma(1-) = " + format_real(jump.inner) +
                         ", Gamma(1+) = " + format_real(jump.outer));
    }
    Estimate e;
    if (opt.method == "closed") {
        e.value = gamma_closed(opt.n, opt.rho);
    } else if (opt.method == "residue") {
        e.value = gamma_by_residue(opt.n, opt.rho);
    } else if (opt.method == "quadrature") {
        e.value = gamma_by_angular_quadrature(opt.n, opt.rho);
    } else {
        throw UsageError("unknown gamma method '" + opt.method + "'");
    }
    emit(opt, render_estimate(opt, "Gamma(rho=" + format_real(opt.rho) + ")", e));
    return 0;
}

int run_landscape(const Options& opt) {
    if (!(opt.j > 0.0)) throw UsageError("--j must be positive");
    for (double k : opt.ks) {
        if (!(k > 0.0)) throw UsageError("every --k must be positive");
    }
    const auto rows = landscape_sweep(opt.j, opt.ks);
    emit(opt, sweep_csv(rows));
    if (rows.size() >= 2) {
        const std::string line = "fitted slope of ln l_star vs ln k: " + format_real(fitted_slope(rows)) + '\n';
        (opt.out.empty() ? std::cerr : std::cout) << line;
    }
    return 0;
}

bool is_usage_kind(ErrorKind k) {
    return k == ErrorKind::InvalidOrder || k == ErrorKind::Domain || k == ErrorKind::InvalidSpec ||
           k == ErrorKind::Pole || k == ErrorKind::NoInteriorMinimum;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Correlation coefficient of symmetric vortex polygons: identities and oracles"};
    app.require_subcommand(1);
    Options opt;
    const std::vector<std::string> formats{"text", "json", "csv"};

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", opt.out, "Write output to this file instead of stdout");
        sub->add_option("--threads", opt.threads, "Worker threads (default: GLCORR_THREADS or all cores)")
            ->check(CLI::NonNegativeNumber);
    };
    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("--eps", opt.eps, "Epsilon schedule, comma separated, decreasing")
            ->delimiter(',');
        sub->add_option("--outer", opt.outer, "Outer radius of the quadrature disc");
        sub->add_option("--angular", opt.angular, "Initial angular samples (power of two >= 64)");
    };

    CLI::App* verify = app.add_subcommand("verify", "Run the identity suite");
    verify->add_option("--max-n", opt.max_n, "Largest polygon order")->check(CLI::Range(2, 16));
    verify->add_option("--tol", opt.tol, "Tolerance (each check keeps its own floor)")
        ->check(CLI::PositiveNumber);
    add_common(verify);

    CLI::App* report = app.add_subcommand("report", "Identity, quadrature and landscape suites");
    report->add_option("--max-n", opt.max_n, "Largest polygon order")->check(CLI::Range(2, 16));
    report->add_option("--tol", opt.tol, "Tolerance (each check keeps its own floor)")
        ->check(CLI::PositiveNumber);
    add_common(report);

    CLI::App* a0 = app.add_subcommand("a0", "A_0 by one route");
    a0->add_option("--n", opt.n, "Polygon order N")->check(CLI::Range(2, 1000));
    a0->add_option("--m", opt.m, "Outer charge m");
    a0->add_option("--method", opt.method, "closed | series_residue | pv | regularized")
        ->check(CLI::IsMember({"closed", "series_residue", "pv", "regularized"}));
    a0->add_option("--tol", opt.tol, "Series tolerance / radial quadrature tolerance")
        ->check(CLI::PositiveNumber);
    add_spec(a0);
    add_common(a0);

    CLI::App* gamma = app.add_subcommand("gamma", "Gamma(rho) by one route");
    gamma->add_option("--n", opt.n, "Polygon order N")->check(CLI::Range(2, 1000));
    gamma->add_option("--rho", opt.rho, "Radius rho > 0, rho != 1")->check(CLI::PositiveNumber);
    gamma->add_option("--method", opt.method, "closed | residue | quadrature")
        ->check(CLI::IsMember({"closed", "residue", "quadrature"}));
    add_common(gamma);

    CLI::App* landscape = app.add_subcommand("landscape", "Minimizer sweep of the model energy");
    landscape->add_option("--j", opt.j, "Correlation constant J > 0");
    landscape->add_option("--k", opt.ks, "Values of k, comma separated")->delimiter(',');
    landscape->add_option("--out", opt.out, "CSV output file (stdout if absent)");
    landscape->add_option("--threads", opt.threads, "Worker threads")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (opt.threads > 0) set_thread_count(opt.threads);
    try {
        if (verify->parsed()) return run_verify(opt);
        if (report->parsed()) {
            if (opt.format == "text" && report->count("--format") == 0) opt.format = "json";
            return run_report(opt);
        }
        if (a0->parsed()) return run_a0(opt);
        if (gamma->parsed()) return run_gamma(opt);
        if (landscape->parsed()) return run_landscape(opt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return is_usage_kind(e.kind()) ? kExitUsage : kExitFail;
    }
    return kExitUsage;
}
