// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.
// Tolerances are fixed here; reference values come from oracles.hpp.

#include "glcorr/algebra.hpp"
#include "glcorr/config.hpp"
#include "glcorr/integrand.hpp"
#include "glcorr/landscape.hpp"
#include "glcorr/quadrature.hpp"
#include "glcorr/report.hpp"
#include "glcorr/residue.hpp"
#include "glcorr/series.hpp"

#include "oracles.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace glcorr;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome c1_beta() {
    constexpr double tol = 1e-10;
    constexpr double max_seconds = 1.0;
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (int n = 2; n <= 64; ++n) {
        const double b = to_double(beta(n));
        worst = std::max(worst, std::abs(b - oracle::beta_by_sines(n)) / b);
    }
    const double t = seconds_since(t0);
    return {worst <= tol && t < max_seconds, fmt("max rel err %.2e (tol 1e-10), %.3f s", worst, t)};
}

Outcome c2_alpha_zero() {
    constexpr double tol = 1e-11;
    double worst = 0.0;
    for (int n = 2; n <= 32; ++n) {
        for (int k = 1; k <= n; ++k) worst = std::max(worst, std::abs(alpha(n, k, oracle::vertex(n, k))));
    }
    return {worst <= tol, fmt("max |alpha_k(a_k)| %.2e (tol 1e-11)", worst)};
}

Outcome c3_alpha_prime() {
    constexpr double tol = 1e-10;
    double worst = 0.0;
    for (int n = 2; n <= 32; ++n) {
        const double r = 0.5 * std::min(1.0, 2.0 * std::sin(oracle::pi / n));
        for (int k = 1; k <= n; ++k) {
            const Complex ak = oracle::vertex(n, k);
            const Complex d = oracle::cauchy_derivative(
                [&](Complex x) { return oracle::alpha_by_subtraction(n, k, x); }, ak, r, 256);
            const Complex closed = alpha_prime_at_vortex(n, k);
            worst = std::max(worst, std::abs(closed - d) / std::abs(closed));
        }
    }
    return {worst <= tol, fmt("max rel err vs contour derivative %.2e (tol 1e-10)", worst)};
}

std::vector<QuadratureResult> series_values() {
    std::vector<QuadratureResult> out;
    for (int n = 2; n <= 8; ++n) out.push_back(I_by_series(n, 1e-8));
    return out;
}

Outcome c4_I() {
    constexpr double tol = 1e-6;
    constexpr double max_seconds = 30.0;
    const auto t0 = std::chrono::steady_clock::now();
    const auto vals = series_values();
    const double t = seconds_since(t0);
    double worst = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const double ref = oracle::half_value(n);
        worst = std::max(worst, std::abs(vals[n - 2].value - ref) / ref);
    }
    const bool anchors = std::abs(vals[0].value - 2.0 * oracle::pi) <= tol * 2.0 * oracle::pi &&
                         std::abs(vals[2].value - 20.0 * oracle::pi) <= tol * 20.0 * oracle::pi;
    return {worst <= tol && anchors && t < max_seconds,
            fmt("max rel err %.2e (tol 1e-6), N=2 -> %.12f pi, %.2f s", worst, vals[0].value / oracle::pi, t)};
}

Outcome c5_II() {
    constexpr double tol = 1e-6;
    constexpr double gamma_tol = 1e-8;
    double worst = 0.0, worst_g = 0.0;
    for (int n = 2; n <= 8; ++n) {
        const double ref = oracle::half_value(n);
        worst = std::max(worst, std::abs(II_by_gamma(n, 1e-8).value - ref) / ref);
        worst_g = std::max(worst_g, std::abs(rho_gamma_integral(n, 1e-8).value - oracle::pi * n) / (oracle::pi * n));
    }
    return {worst <= tol && worst_g <= gamma_tol,
            fmt("II max rel err %.2e (tol 1e-6); int rho Gamma max rel err %.2e (tol 1e-8)", worst, worst_g)};
}

Outcome c6_gamma() {
    constexpr double tol = 1e-9;
    double worst = 0.0, jump_err = 0.0;
    for (int n : {2, 3, 5}) {
        for (double rho : {0.3, 0.9, 1.1, 3.0}) {
            const double ref = oracle::gamma_theta(n, rho);
            worst = std::max({worst, std::abs(gamma_by_residue(n, rho) - ref), std::abs(gamma_closed(n, rho) - ref),
                              std::abs(gamma_by_angular_quadrature(n, rho) - ref)});
        }
        const GammaJump j = gamma_at_one(n);
        jump_err = std::max(jump_err, std::abs(j.inner - j.outer - 2.0 * oracle::pi * n));
        jump_err = std::max({jump_err, std::abs(j.inner - oracle::gamma_formula(n, std::nextafter(1.0, 0.0))),
                             std::abs(j.outer - oracle::gamma_formula(n, std::nextafter(1.0, 2.0)))});
    }
    return {worst <= tol && jump_err <= tol,
            fmt("max abs err across routes %.2e (tol 1e-9); jump err %.2e", worst, jump_err)};
}

Outcome c7_tail() {
    constexpr double tol = 1e-9;
    const double v = tail_integral_check();
    const double ref = oracle::tail_integral();
    const bool ok = std::abs(v - 0.5) <= tol && std::abs(ref - 0.5) <= tol;
    return {ok, "tail_integral_check = " + format_real(v) + " (oracle " + format_real(ref) + ", tol 1e-9)"};
}

std::vector<QuadratureResult> a0_values() {
    std::vector<QuadratureResult> out;
    for (int n = 2; n <= 5; ++n) out.push_back(a0_numeric(n, 1, QuadratureSpec{}));
    return out;
}

Outcome c8_theorem() {
    constexpr double ratio_tol = 5e-3;
    constexpr double max_seconds_per_n = 300.0;
    double worst = 0.0, slowest = 0.0;
    for (int n = 2; n <= 5; ++n) {
        const auto t0 = std::chrono::steady_clock::now();
        const auto a = a0_numeric(n, 1, QuadratureSpec{});
        slowest = std::max(slowest, seconds_since(t0));
        worst = std::max(worst, std::abs(a.value) / oracle::half_value(n));
    }
    return {worst <= ratio_tol && slowest <= max_seconds_per_n,
            fmt("max |A0|/I %.2e (tol 5e-3), slowest N %.2f s", worst, slowest)};
}

Outcome c9_remark() {
    const bool a = ovsi_partial(2, 2).coefficient == Rational(8);
    const bool b = ovsi_partial(4, 2).coefficient == Rational(80);
    return {a && b, "ovsi_partial(2,2) = 8 pi: " + std::string(a ? "yes" : "no") +
                        ", ovsi_partial(4,2) = 80 pi: " + (b ? "yes" : "no")};
}

Outcome c10_scaling() {
    const QuadratureSpec spec;
    const double one = a0_numeric(3, 1, spec).value;
    const double two = a0_numeric(3, 2, spec).value;
    return {two == 16.0 * one, "a0_numeric(3,2) = " + format_real(two) + ", 16 a0_numeric(3,1) = " +
                                   format_real(16.0 * one)};
}

Outcome c11_circle_averages() {
    // Long double evaluation: at r = 1e-3 the samples reach 1e8, so in double
    // the mean is only resolved to about 1e-8.
    constexpr double tol = 1e-10;
    double worst = 0.0;
    for (int n = 2; n <= 16; ++n) {
        const Counterterm ct(n);
        auto record = [&](const CircleStatistics& s) { worst = std::max(worst, std::abs(s.mean)); };
        for (double r : {1e-1, 1e-2, 1e-3}) {
            record(circle_statistics_extended([&](ExtendedComplex y) { return near_zero_model(y, n); }, r, 64));
            for (int k = 1; k <= n; ++k) {
                record(circle_statistics_extended([&](ExtendedComplex y) { return near_vortex_model_at_offset(y, n, k); }, r, 64));
                record(circle_statistics_extended([&](ExtendedComplex y) { return ct.component_at_offset(y, k); }, r, 64));
            }
        }
    }
    return {worst <= tol, fmt("max |circle mean| %.2e (tol 1e-10), N = 2..16, 64 samples", worst)};
}

Outcome c12_homogeneity() {
    // The error is measured against |S|^4 + sum |t|^4, the size of the terms
    // that cancel in the integrand. Scaling by 10 rounds the inputs, so near
    // a zero of the integrand the pointwise relative error is set by that
    // rounding times the cancellation ratio; it is printed for reference.
    constexpr double tol = 1e-12;
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    double worst = 0.0, pointwise = 0.0;
    for (int n : {2, 3, 5, 8}) {
        const auto cfg = make_symmetric_config(n, 1);
        const auto pts = oracle::polygon(n, 1.0);
        for (double lambda : {0.5, 2.0, 10.0}) {
            const auto scaled = cfg.scaled(lambda);
            for (int i = 0; i < 50; ++i) {
                const Complex x(u(rng), u(rng));
                const double base = raw_integrand(x, cfg);
                const double diff = std::abs(raw_integrand(lambda * x, scaled) * std::pow(lambda, 4) - base);
                worst = std::max(worst, diff / oracle::integrand_scale(x, pts));
                pointwise = std::max(pointwise, diff / std::abs(base));
            }
        }
    }
    return {worst <= tol, fmt("max err / term scale %.2e (tol 1e-12); pointwise relative %.2e", worst, pointwise)};
}

Outcome c13_forceless() {
    constexpr double tol = 1e-10;
    double worst = 0.0, fd_worst = 0.0;
    for (int n = 2; n <= 16; ++n) {
        for (int m : {1, 2, 3}) {
            worst = std::max(worst, pairwise_energy(make_symmetric_config(n, m)).gradient_norm());
            for (const Complex& g : oracle::energy_gradient_fd(oracle::polygon(n, m))) {
                fd_worst = std::max(fd_worst, std::abs(g));
            }
        }
    }
    return {worst <= tol, fmt("max |grad H| %.2e (tol 1e-10); finite-difference oracle %.1e", worst, fd_worst)};
}

Outcome c14_landscape() {
    constexpr double slope_tol = 1e-3;
    constexpr double golden_tol = 1e-10;
    std::vector<double> ks;
    for (int i = 0; i <= 30; ++i) ks.push_back(std::pow(10.0, 3.0 + 0.1 * i));
    const auto rows = landscape_sweep(10.0, ks);
    std::vector<double> x, y;
    for (const auto& r : rows) {
        x.push_back(std::log(r.k));
        y.push_back(std::log(r.l_star));
    }
    const double slope = oracle::least_squares_slope(x, y);
    double worst = 0.0;
    for (double k : ks) {
        const ModelEnergyParams p{10.0, k};
        worst = std::max(worst, std::abs(minimize_model_golden(p) - minimize_model(p)));
    }
    return {std::abs(slope + 0.25) <= slope_tol && std::abs(fitted_slope(rows) + 0.25) <= slope_tol &&
                worst <= golden_tol,
            fmt("slope %.12f (tol 1e-3), golden vs closed %.2e (tol 1e-10)", slope, worst)};
}

std::string fingerprint() {
    std::string s;
    for (const auto& r : series_values()) s += format_real(r.value) + ',' + format_real(r.error_estimate) + ';';
    for (int n = 2; n <= 8; ++n) {
        const auto ii = II_by_gamma(n, 1e-8);
        s += format_real(ii.value) + ',' + format_real(ii.error) + ';';
    }
    for (const auto& r : a0_values()) {
        s += format_real(r.value) + ',' + format_real(r.error_estimate) + ';';
        for (const auto& e : r.extrapolation_table) s += format_real(e.value) + ',';
    }
    return s;
}

Outcome c15_determinism() {
    std::vector<std::string> prints;
    for (int t : {1, 4, 8}) {
        set_thread_count(t);
        prints.push_back(fingerprint());
    }
    set_thread_count(0);
    const bool same = prints[0] == prints[1] && prints[0] == prints[2];
    return {same, same ? "criteria 4, 5, 8 values identical for 1, 4, 8 threads"
                       : "values differ between thread counts"};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"beta_N identity", c1_beta},
        {"alpha_k(a_k) = 0", c2_alpha_zero},
        {"alpha_k'(a_k) closed form", c3_alpha_prime},
        {"I by series", c4_I},
        {"II by Gamma", c5_II},
        {"Gamma cross-route and jump", c6_gamma},
        {"tail integral", c7_tail},
        {"A_0 vanishes numerically", c8_theorem},
        {"8 pi and 80 pi values", c9_remark},
        {"m^4 scaling", c10_scaling},
        {"circle averages", c11_circle_averages},
        {"homogeneity", c12_homogeneity},
        {"forceless configurations", c13_forceless},
        {"landscape scaling", c14_landscape},
        {"thread determinism", c15_determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::printf("criterion %2zu %-28s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%zu criteria: %zu passed, %d failed\n", criteria.size(), criteria.size() - failed, failed);
    return failed == 0 ? 0 : 1;
}
