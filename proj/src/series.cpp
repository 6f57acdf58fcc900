#include "glcorr/series.hpp"

#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace glcorr {

ParsevalCheck parseval_check(std::span<const Complex> coeffs, int samples) {
    ParsevalCheck out;
    std::vector<double> moduli;
    moduli.reserve(coeffs.size());
    for (const Complex& g : coeffs) moduli.push_back(std::norm(g));
    out.coefficient_sum = pairwise_sum(moduli);
    out.angular = periodic_mean(
        [&](double theta) {
            Complex s = 0.0;
            const Complex step = std::polar(1.0, theta);
            Complex phase = 1.0;
            for (const Complex& g : coeffs) {
                s += g * phase;
                phase *= step;
            }
            return std::norm(s);
        },
        samples);
    return out;
}

namespace {

/// Bound on sum_{k > K} t_k given t_{K+1} and the ratio t_{k+1}/t_k at
/// k = K+1, which dominates every later ratio for the series used here.
double geometric_tail(double first_omitted, double ratio) {
    if (first_omitted == 0.0) return 0.0;
    if (!(ratio < 1.0)) return std::numeric_limits<double>::infinity();
    return first_omitted / (1.0 - ratio);
}

}  // namespace

RadialDensity::RadialDensity(int n, Region region, double tolerance)
    : n_(n), region_(region), tolerance_(tolerance) {
    if (n < 2) throw Error(ErrorKind::InvalidOrder, "polygon order must be >= 2");
    if (!(tolerance > 0.0)) throw Error(ErrorKind::Domain, "tolerance must be positive");
}

void RadialDensity::check_domain(double rho) const {
    const bool ok = region_ == Region::Inner ? (rho > 0.0 && rho < 1.0) : (rho > 1.0);
    if (!ok) {
        throw Error(ErrorKind::Domain,
                    std::string(region_ == Region::Inner ? "inner" : "outer") +
                        " density evaluated at rho = " + std::to_string(rho));
    }
}

SeriesValue RadialDensity::truncated(double rho, int max_k) const {
    check_domain(rho);
    const double nd = n_;
    // Inner: lattice sum_{k>=1} (kN-1)^2 q^k with q = rho^{2N},
    //        vertex sum_{k>=0} (k+1)^2 s^k with s = rho^2.
    // Outer: lattice sum_{k>=1} (kN+1)^2 q^k with q = rho^{-2N},
    //        vertex sum_{k>=0} (k+1)^2 s^k with s = rho^{-2}.
    const bool inner = region_ == Region::Inner;
    const double s = inner ? rho * rho : 1.0 / (rho * rho);
    const double q = std::pow(s, n_);
    const double shift = inner ? -1.0 : 1.0;

    double lattice = 0.0;
    double qk = q;
    for (int k = 1; k <= max_k; ++k) {
        const double c = k * nd + shift;
        lattice += c * c * qk;
        qk *= q;
    }
    const double next_c = (max_k + 1) * nd + shift;
    const double next_ratio = std::pow(((max_k + 2) * nd + shift) / next_c, 2) * q;
    const double lattice_tail = geometric_tail(next_c * next_c * qk, next_ratio);

    double vertices = 0.0;
    double sk = 1.0;
    for (int k = 0; k <= max_k; ++k) {
        vertices += static_cast<double>(k + 1) * (k + 1) * sk;
        sk *= s;
    }
    const double vk = static_cast<double>(max_k + 2);
    const double vertex_ratio = std::pow((vk + 1.0) / vk, 2) * s;
    const double vertex_tail = geometric_tail(vk * vk * sk, vertex_ratio);

    SeriesValue out;
    out.terms = max_k + 1;
    if (inner) {
        const double r3 = rho * rho * rho;
        out.value = nd * nd * lattice / r3 - nd * rho * vertices;
        out.tail_bound = nd * nd * lattice_tail / r3 + nd * rho * vertex_tail;
    } else {
        const double r3 = rho * rho * rho;
        const double far = (std::pow(nd + 1.0, 4) - std::pow(nd - 1.0, 4)) / 16.0;
        out.value = (nd * nd * lattice + far - nd * vertices) / r3;
        out.tail_bound = (nd * nd * lattice_tail + nd * vertex_tail) / r3;
    }
    return out;
}

SeriesValue RadialDensity::evaluate(double rho) const {
    check_domain(rho);
    // Grow the truncation geometrically; the tail bound is monotone in K.
    int k = 16;
    while (true) {
        const SeriesValue v = truncated(rho, k);
        const double scale = std::max(1.0, std::abs(v.value) + v.tail_bound);
        if (std::isfinite(v.tail_bound) && v.tail_bound <= tolerance_ * scale) return v;
        if (k >= kMaxTerms) {
            throw Error(ErrorKind::TruncationFailure,
                        "radial series at rho = " + std::to_string(rho) + " needs more than " +
                            std::to_string(kMaxTerms) + " terms");
        }
        k = std::min(2 * k, kMaxTerms);
    }
}

double RadialDensity::closed(double rho) const {
    check_domain(rho);
    const double nd = n_;
    const bool inner = region_ == Region::Inner;
    const double log_s = inner ? 2.0 * std::log(rho) : -2.0 * std::log(rho);
    const double s = std::exp(log_s);
    const double q = std::exp(nd * log_s);
    const double one_minus_q = -std::expm1(nd * log_s);
    const double one_minus_s = -std::expm1(log_s);
    const double r3 = rho * rho * rho;
    // sum_{k>=1} k^2 q^k, sum k q^k, sum q^k.
    const double k2 = q * (1.0 + q) / (one_minus_q * one_minus_q * one_minus_q);
    const double k1 = q / (one_minus_q * one_minus_q);
    const double k0 = q / one_minus_q;
    const double vertices = (1.0 + s) / (one_minus_s * one_minus_s * one_minus_s);
    if (inner) {
        const double lattice = nd * nd * k2 - 2.0 * nd * k1 + k0;
        return nd * nd * lattice / r3 - nd * rho * vertices;
    }
    const double lattice = nd * nd * k2 + 2.0 * nd * k1 + k0;
    const double far = (std::pow(nd + 1.0, 4) - std::pow(nd - 1.0, 4)) / 16.0;
    return (nd * nd * lattice + far - nd * vertices) / r3;
}

double RadialDensity::antiderivative(double rho) const {
    check_domain(rho);
    const double nd = n_;
    const bool inner = region_ == Region::Inner;
    const double log_s = inner ? 2.0 * std::log(rho) : -2.0 * std::log(rho);
    const double s = std::exp(log_s);
    const double q = std::exp(nd * log_s);
    const double one_minus_q = -std::expm1(nd * log_s);
    const double one_minus_s = -std::expm1(log_s);
    const double r2 = rho * rho;
    const double k1 = q / (one_minus_q * one_minus_q);
    const double k0 = q / one_minus_q;
    const double vertices = 0.5 * nd * s / (one_minus_s * one_minus_s);
    if (inner) {
        // int_0^rho: N^2 (kN-1) rho^{2kN-2}/2 summed, minus N(k+1) rho^{2k+2}/2.
        return 0.5 * nd * nd * (nd * k1 - k0) / r2 - vertices;
    }
    // int_rho^inf: N^2 (kN+1) rho^{-2kN-2}/2 summed, the rho^-3 term, and
    // -N (k+1) rho^{-2k-2}/2 summed.
    const double far = (std::pow(nd + 1.0, 4) - std::pow(nd - 1.0, 4)) / 16.0;
    return 0.5 * nd * nd * (nd * k1 + k0) / r2 + 0.5 * far / r2 - vertices;
}

double radial_density(int n, double rho, Region region, double tolerance) {
    return RadialDensity(n, region, tolerance).evaluate(rho).value;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

}  // namespace

QuadratureResult I_by_series(int n, double tol) {
    if (n < 2) throw Error(ErrorKind::InvalidOrder, "polygon order must be >= 2");
    if (!(tol >= 1e-12)) throw Error(ErrorKind::Domain, "I_by_series needs tol >= 1e-12");

    const RadialDensity inner(n, Region::Inner, 1e-3 * tol);
    const RadialDensity outer(n, Region::Outer, 1e-3 * tol);
    const double edge = 1.0 - kSeriesSwitch;

    // Quadrature of the truncated series away from rho = 1. The outer range
    // (1/edge, inf) is mapped to t = 1/rho in (0, edge).
    struct Piece {
        bool is_inner;
        double a;
        double b;
    };
    const Piece pieces[] = {{true, 0.0, 0.5},  {true, 0.5, 0.9},  {true, 0.9, edge},
                            {false, 0.0, 0.5}, {false, 0.5, 0.9}, {false, 0.9, edge}};
    const auto estimates = parallel_map<IntegralEstimate>(std::size(pieces), [&](std::size_t i) {
        const Piece& p = pieces[i];
        std::function<double(double)> f;
        if (p.is_inner) {
            f = [&](double rho) { return inner.evaluate(rho).value; };
        } else {
            f = [&](double t) { return outer.evaluate(1.0 / t).value / (t * t); };
        }
        return integrate_adaptive(f, p.a, p.b, 0.1 * tol, 0.1 * tol);
    });
    std::vector<double> values;
    std::vector<double> errors;
    std::size_t evaluations = 0;
    for (const auto& e : estimates) {
        values.push_back(e.value);
        errors.push_back(e.error);
        evaluations += e.evaluations;
    }
    const double bulk = pairwise_sum(values);
    // Truncation contributes at most tolerance * scale per point; scale is
    // bounded by the largest density magnitude on the bulk range.
    const double truncation = 1e-3 * tol * (std::abs(inner.closed(edge)) + 1.0);
    const double bulk_error = pairwise_sum(errors) + truncation;

    std::vector<double> eps(std::begin(kSeriesEpsilons), std::end(kSeriesEpsilons));
    std::vector<double> partial;
    for (double e : eps) {
        const double near_inner = inner.antiderivative(1.0 - e) - inner.antiderivative(edge);
        const double near_outer = outer.antiderivative(1.0 / (1.0 - e)) - outer.antiderivative(1.0 / edge);
        partial.push_back(kTwoPi * (bulk + near_inner + near_outer));
    }
    return extrapolate_limit(eps, partial, kTwoPi * bulk_error, evaluations);
}

QuadratureResult I_by_f_bracket(int n) {
    const double nd = n;
    const double constant = nd * (nd * nd + 1.0) * std::numbers::pi / 2.0;
    std::vector<double> eps(std::begin(kSeriesEpsilons), std::end(kSeriesEpsilons));
    std::vector<double> partial;
    for (double e : eps) partial.push_back(kTwoPi * nd * f_bracket(n, 1.0 - e) + constant);
    return extrapolate_limit(eps, partial, 0.0, eps.size());
}

}  // namespace glcorr
