#include "glcorr/integrand.hpp"

#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"
#include "glcorr/numerics.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace glcorr {

namespace {

/// exp(2 pi i p / N) in long double.
ExtendedComplex extended_root(int n, long p) {
    const long r = ((p % n) + n) % n;
    return std::polar(1.0L, 2.0L * std::numbers::pi_v<long double> * r / n);
}

template <typename T>
T counterterm_term(std::complex<T> weight, std::complex<T> y) {
    if (y == T(0)) throw Error(ErrorKind::Pole, "counterterm evaluated at a polygon vertex");
    return (weight / (y * y * (T(1) + std::norm(y)))).real();
}

}  // namespace

double raw_integrand(Complex x, const VortexConfiguration& cfg) {
    const auto pos = cfg.positions();
    const auto q = cfg.charges();
    const std::size_t count = pos.size();

    std::size_t dominant = 0;
    double dominant_mod2 = -1.0;
    Complex total = 0.0;
    double fourth_powers = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        const Complex d = x - pos[j];
        if (d == 0.0) throw Error(ErrorKind::Pole, "integrand evaluated at a vortex position");
        const Complex t = q[j] / d;
        const double mod2 = std::norm(t);
        total += t;
        if (mod2 > dominant_mod2) {
            dominant_mod2 = mod2;
            dominant = j;
        }
    }
    const Complex u = q[dominant] / (x - pos[dominant]);
    Complex rest = 0.0;
    for (std::size_t j = 0; j < count; ++j) {
        if (j == dominant) continue;
        const Complex t = q[j] / (x - pos[j]);
        rest += t;
        const double mod2 = std::norm(t);
        fourth_powers += mod2 * mod2;
    }
    const double u2 = std::norm(u);
    const double s2 = std::norm(total);
    const double s2_minus_u2 = 2.0 * (u * std::conj(rest)).real() + std::norm(rest);
    return s2_minus_u2 * (s2 + u2) - fourth_powers;
}

Counterterm::Counterterm(int n) {
    const double b = to_double(beta(n));
    vertices_.reserve(static_cast<std::size_t>(n));
    weights_.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) {
        const Complex a = root_of_unity(n, j);
        vertices_.push_back(a);
        weights_.push_back(b * a * a);
        extended_weights_.push_back(extended_root(n, 2 * (j - 1)) *
                                    (static_cast<long double>(n) * n - 1.0L) / 3.0L);
    }
}

double Counterterm::component(Complex x, int j) const {
    if (j < 1 || j > order()) throw Error(ErrorKind::Domain, "vertex index out of range");
    const std::size_t i = static_cast<std::size_t>(j - 1);
    const Complex y = x - vertices_[i];
    if (y == 0.0) throw Error(ErrorKind::Pole, "counterterm evaluated at a polygon vertex");
    return (weights_[i] / (y * y * (1.0 + std::norm(y)))).real();
}

double Counterterm::component_at_offset(Complex y, int j) const {
    if (j < 1 || j > order()) throw Error(ErrorKind::Domain, "vertex index out of range");
    return counterterm_term(weights_[static_cast<std::size_t>(j - 1)], y);
}

long double Counterterm::component_at_offset(ExtendedComplex y, int j) const {
    if (j < 1 || j > order()) throw Error(ErrorKind::Domain, "vertex index out of range");
    return counterterm_term(extended_weights_[static_cast<std::size_t>(j - 1)], y);
}

double Counterterm::operator()(Complex x) const {
    double sum = 0.0;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        const Complex y = x - vertices_[i];
        if (y == 0.0) throw Error(ErrorKind::Pole, "counterterm evaluated at a polygon vertex");
        sum += (weights_[i] / (y * y * (1.0 + std::norm(y)))).real();
    }
    return sum;
}

double counterterm_component(Complex x, int n, int j) { return Counterterm(n).component(x, j); }

double counterterm(Complex x, int n) { return Counterterm(n)(x); }

namespace {

template <typename T>
T origin_model(std::complex<T> x, int n) {
    if (n < 2) throw Error(ErrorKind::InvalidOrder, "polygon order must be >= 2");
    if (x == T(0)) throw Error(ErrorKind::Pole, "origin model evaluated at the origin");
    const T r2 = std::norm(x);
    if (!(r2 < T(1))) throw Error(ErrorKind::Domain, "origin model needs 0 < |x| < 1");
    std::complex<T> xn = T(1);
    for (int i = 0; i < n; ++i) xn *= x;
    const T nd = n;
    return T(-0.5) * nd * (nd - 1) * (nd - 1) * (nd - 1) * (xn / ((xn - T(1)) * (r2 * r2))).real();
}

template <typename T>
T vertex_model(std::complex<T> y, std::complex<T> slope) {
    if (y == T(0)) throw Error(ErrorKind::Pole, "vertex model evaluated at its vertex");
    const T r2 = std::norm(y);
    if (!(r2 < T(0.25))) throw Error(ErrorKind::Domain, "vertex model needs 0 < |x - a_k| < 1/2");
    return T(4) * (slope * y * y).real() / (r2 * r2);
}

}  // namespace

double near_zero_model(Complex x, int n) { return origin_model(x, n); }

long double near_zero_model(ExtendedComplex x, int n) { return origin_model(x, n); }

double near_vortex_model(Complex x, int n, int k) {
    return near_vortex_model_at_offset(x - root_of_unity(n, k), n, k);
}

double near_vortex_model_at_offset(Complex y, int n, int k) {
    return vertex_model(y, alpha_prime_at_vortex(n, k));
}

long double near_vortex_model_at_offset(ExtendedComplex y, int n, int k) {
    // alpha_k'(a_k) = (beta_N / 4) a_k^{N-2}
    const ExtendedComplex slope =
        extended_root(n, static_cast<long>(k - 1) * (n - 2)) * ((static_cast<long double>(n) * n - 1.0L) / 12.0L);
    return vertex_model(y, slope);
}

double circle_average(const PlanarField& f, Complex center, double radius, int samples) {
    if (samples < 16) throw Error(ErrorKind::Domain, "circle average needs >= 16 samples");
    if (!(radius > 0.0)) throw Error(ErrorKind::Domain, "circle radius must be positive");
    return periodic_mean(
        [&](double theta) {
            const double v = f(center + std::polar(radius, theta));
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::Evaluation, "non-finite sample on the circle");
            }
            return v;
        },
        samples);
}

CircleStatistics circle_statistics(const PlanarField& offset_field, double radius, int samples) {
    if (samples < 16) throw Error(ErrorKind::Domain, "circle average needs >= 16 samples");
    if (!(radius > 0.0)) throw Error(ErrorKind::Domain, "circle radius must be positive");
    CircleStatistics out;
    out.mean = periodic_mean(
        [&](double theta) {
            const double v = offset_field(std::polar(radius, theta));
            if (!std::isfinite(v)) {
                throw Error(ErrorKind::Evaluation, "non-finite sample on the circle");
            }
            out.max_abs = std::max(out.max_abs, std::abs(v));
            return v;
        },
        samples);
    return out;
}

CircleStatistics circle_statistics_extended(const ExtendedField& offset_field, double radius, int samples) {
    if (samples < 16) throw Error(ErrorKind::Domain, "circle average needs >= 16 samples");
    if (!(radius > 0.0)) throw Error(ErrorKind::Domain, "circle radius must be positive");
    CircleStatistics out;
    const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
    std::vector<long double> values(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        const long double v = offset_field(std::polar(static_cast<long double>(radius), two_pi * i / samples));
        if (!std::isfinite(v)) throw Error(ErrorKind::Evaluation, "non-finite sample on the circle");
        out.max_abs = std::max(out.max_abs, static_cast<double>(std::abs(v)));
        values[static_cast<std::size_t>(i)] = v;
    }
    // Pairwise reduction, as in pairwise_sum.
    for (std::size_t width = 1; width < values.size(); width *= 2) {
        for (std::size_t i = 0; i + width < values.size(); i += 2 * width) values[i] += values[i + width];
    }
    out.mean = static_cast<double>(values[0] / samples);
    return out;
}

RegularizedField::RegularizedField(int n, int m, bool subtract_counterterm,
                                   bool subtract_near_zero_model)
    : cfg_(make_symmetric_config(n, m)),
      n_(n),
      m_(m),
      m4_(static_cast<double>(m) * m * m * m),
      counterterm_(n),
      subtract_counterterm_(subtract_counterterm),
      subtract_near_zero_model_(subtract_near_zero_model) {}

double RegularizedField::operator()(Complex x) const {
    double v = raw_integrand(x, cfg_);
    if (subtract_counterterm_) v -= m4_ * counterterm_(x);
    if (subtract_near_zero_model_) v -= m4_ * near_zero_model(x, n_);
    return v;
}

}  // namespace glcorr
