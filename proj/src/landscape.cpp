#include "glcorr/landscape.hpp"

#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace glcorr {

namespace {

constexpr double kPi = std::numbers::pi;

void check_k(const ModelEnergyParams& p) {
    if (!(p.k > 0.0)) throw Error(ErrorKind::Domain, "k must be positive");
}

/// E(c) - E(d) with the l^6 difference factored, so the comparison keeps
/// full relative precision when c and d are close.
double energy_difference(double c, double d, const ModelEnergyParams& p) {
    double sixth = 0.0;
    for (int i = 0; i <= 5; ++i) sixth += std::pow(c, i) * std::pow(d, 5 - i);
    const double inverse = -(c + d) / (c * c * d * d * p.k * p.k);
    return (c - d) * (3.0 * kPi * sixth + p.J * inverse);
}

}  // namespace

double renormalized_W(double l) {
    if (!(l >= 0.0 && l < 1.0)) throw Error(ErrorKind::Domain, "W needs 0 <= l < 1");
    const double l6 = std::pow(l, 6);
    return -6.0 * kPi * std::log(3.0) - 6.0 * kPi * std::log1p(-l6);
}

double model_energy(double l, const ModelEnergyParams& p) {
    check_k(p);
    if (!(l > 0.0)) throw Error(ErrorKind::Domain, "model energy needs l > 0");
    const double lk = l * p.k;
    return 3.0 * kPi * std::pow(l, 6) + p.J / (lk * lk);
}

double model_energy_derivative(double l, const ModelEnergyParams& p) {
    check_k(p);
    if (!(l > 0.0)) throw Error(ErrorKind::Domain, "model energy needs l > 0");
    return 18.0 * kPi * std::pow(l, 5) - 2.0 * p.J / (std::pow(l, 3) * p.k * p.k);
}

double model_energy_second_derivative(double l, const ModelEnergyParams& p) {
    check_k(p);
    if (!(l > 0.0)) throw Error(ErrorKind::Domain, "model energy needs l > 0");
    return 90.0 * kPi * std::pow(l, 4) + 6.0 * p.J / (std::pow(l, 4) * p.k * p.k);
}

double minimize_model(const ModelEnergyParams& p) {
    check_k(p);
    if (!(p.J > 0.0)) {
        throw Error(ErrorKind::NoInteriorMinimum, "model energy has no interior minimum for J <= 0");
    }
    return std::pow(p.J / (9.0 * kPi), 0.125) * std::pow(p.k, -0.25);
}

double minimize_model_golden(const ModelEnergyParams& p) {
    check_k(p);
    if (!(p.J > 0.0)) {
        throw Error(ErrorKind::NoInteriorMinimum, "model energy has no interior minimum for J <= 0");
    }
    double a = 1.0 / p.k;
    double b = 1.0;
    if (a >= b) std::swap(a, b);
    // The energy is convex; grow the bracket until the derivative changes sign.
    while (model_energy_derivative(a, p) > 0.0) a *= 0.5;
    while (model_energy_derivative(b, p) < 0.0) b *= 2.0;

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    for (int i = 0; i < 200; ++i) {
        if (energy_difference(c, d, p) < 0.0) {
            b = d;
            d = c;
            c = b - inv_phi * (b - a);
        } else {
            a = c;
            c = d;
            d = a + inv_phi * (b - a);
        }
        if (!(c > a && d < b)) break;
    }
    return 0.5 * (a + b);
}

double second_order_term(int n, int m, double a) {
    if (!(a > 0.0)) throw Error(ErrorKind::Domain, "polygon radius must be positive");
    return correlation_coefficient(n, m).value() / (a * a);
}

double second_order_term_without_II(int n, int m, double a) {
    if (!(a > 0.0)) throw Error(ErrorKind::Domain, "polygon radius must be positive");
    return ovsi_partial(n, m).value() / (a * a);
}

std::vector<SweepRow> landscape_sweep(double J, std::span<const double> ks) {
    std::vector<SweepRow> rows;
    for (double k : ks) {
        const ModelEnergyParams p{J, k};
        const double l = minimize_model(p);
        rows.push_back({k, J, l, model_energy(l, p)});
    }
    return rows;
}

double fitted_slope(std::span<const SweepRow> rows) {
    if (rows.size() < 2) throw Error(ErrorKind::Domain, "slope fit needs at least two rows");
    double mx = 0.0;
    double my = 0.0;
    for (const auto& r : rows) {
        mx += std::log(r.k);
        my += std::log(r.l_star);
    }
    mx /= static_cast<double>(rows.size());
    my /= static_cast<double>(rows.size());
    double sxy = 0.0;
    double sxx = 0.0;
    for (const auto& r : rows) {
        const double dx = std::log(r.k) - mx;
        sxy += dx * (std::log(r.l_star) - my);
        sxx += dx * dx;
    }
    if (sxx == 0.0) throw Error(ErrorKind::Domain, "slope fit needs distinct k values");
    return sxy / sxx;
}

std::string sweep_csv(std::span<const SweepRow> rows) {
    std::string out = "k,J,l_star,energy_at_min\n";
    char buf[128];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", r.k, r.J, r.l_star,
                      r.energy_at_min);
        out += buf;
    }
    return out;
}

}  // namespace glcorr
