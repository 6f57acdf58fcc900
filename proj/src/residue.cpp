#include "glcorr/residue.hpp"

#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace glcorr {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTailSwitch = 100.0;

std::vector<Pole> merged_poles(const std::vector<Pole>& poles) {
    std::vector<Pole> out;
    for (const Pole& p : poles) {
        if (p.order < 1) throw Error(ErrorKind::UnsupportedOrder, "pole order must be >= 1");
        bool merged = false;
        for (Pole& q : out) {
            if (q.location == p.location) {
                q.order += p.order;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(p);
    }
    return out;
}

Complex residue_of(Complex factor, const std::vector<Pole>& poles, std::size_t index) {
    const Pole& p = poles[index];
    if (p.order > 2) {
        throw Error(ErrorKind::UnsupportedOrder,
                    "pole of order " + std::to_string(p.order) + " is not supported");
    }
    Complex product = factor;
    Complex log_derivative = 0.0;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        if (i == index) continue;
        const Complex d = p.location - poles[i].location;
        for (int k = 0; k < poles[i].order; ++k) product /= d;
        log_derivative -= static_cast<double>(poles[i].order) / d;
    }
    return p.order == 1 ? product : product * log_derivative;
}

}  // namespace

Complex ContourIntegrand::operator()(Complex w) const {
    Complex v = factor;
    for (const Pole& p : poles) {
        for (int k = 0; k < p.order; ++k) v /= (w - p.location);
    }
    return v;
}

QuadraticRoots rho_pm(double rho) {
    if (!(rho > 0.0)) throw Error(ErrorKind::Domain, "rho must be positive");
    const double s = (2.0 + rho * rho) / (2.0 * rho);
    const double plus = s + std::sqrt((s - 1.0) * (s + 1.0));
    return {rho, 1.0 / plus, plus};
}

Complex residue(const ContourIntegrand& f, std::size_t index) {
    if (index >= f.poles.size()) throw Error(ErrorKind::Domain, "pole index out of range");
    return residue_of(f.factor, f.poles, index);
}

Complex unit_circle_integral(const ContourIntegrand& f) {
    const std::vector<Pole> poles = merged_poles(f.poles);
    int total_order = 0;
    for (const Pole& p : poles) {
        if (std::abs(std::abs(p.location) - 1.0) <= kCircleGuard) {
            throw Error(ErrorKind::Conditioning, "pole within the guard band of the unit circle");
        }
        if (p.order > 2) {
            throw Error(ErrorKind::UnsupportedOrder,
                        "pole of order " + std::to_string(p.order) + " is not supported");
        }
        total_order += p.order;
    }
    Complex inside = 0.0;
    Complex outside = 0.0;
    double inside_scale = 0.0;
    double outside_scale = 0.0;
    for (std::size_t i = 0; i < poles.size(); ++i) {
        const Complex r = residue_of(f.factor, poles, i);
        if (std::abs(poles[i].location) < 1.0) {
            inside += r;
            inside_scale = std::max(inside_scale, std::abs(r));
        } else {
            outside += r;
            outside_scale = std::max(outside_scale, std::abs(r));
        }
    }
    // With a constant numerator and total order >= 2 the residue at infinity
    // vanishes, so the exterior residues give the same integral. Use whichever
    // side sums smaller terms: nearly merged poles make their residues large
    // and cancelling.
    const bool use_outside = total_order >= 2 && outside_scale < inside_scale;
    return Complex(0.0, 2.0 * kPi) * (use_outside ? -outside : inside);
}

Complex unit_circle_integral_trapezoid(const ContourIntegrand& f, int samples) {
    // dw = i w d theta.
    const double re = periodic_mean(
        [&](double t) {
            const Complex w = std::polar(1.0, t);
            return (Complex(0.0, 1.0) * w * f(w)).real();
        },
        samples);
    const double im = periodic_mean(
        [&](double t) {
            const Complex w = std::polar(1.0, t);
            return (Complex(0.0, 1.0) * w * f(w)).imag();
        },
        samples);
    return 2.0 * kPi * Complex(re, im);
}

ContourIntegrand gamma_integrand(int n, int j, double rho) {
    if (rho == 1.0) {
        throw Error(ErrorKind::Domain, "Gamma jumps at rho = 1; only one-sided values exist");
    }
    const QuadraticRoots roots = rho_pm(rho);
    const Complex a = root_of_unity(n, j);
    ContourIntegrand f;
    f.factor = Complex(0.0, 1.0) * a * a * a / (rho * rho * rho);
    f.poles = {{a / rho, 2}, {roots.rho_minus * a, 1}, {roots.rho_plus * a, 1}};
    return f;
}

Complex gamma_by_residue_complex(int n, double rho) {
    if (n < 2) throw Error(ErrorKind::InvalidOrder, "polygon order must be >= 2");
    if (!(rho > 0.0)) throw Error(ErrorKind::Domain, "rho must be positive");
    Complex sum = 0.0;
    for (int j = 1; j <= n; ++j) sum += unit_circle_integral(gamma_integrand(n, j, rho));
    return sum;
}

double gamma_by_residue(int n, double rho) { return gamma_by_residue_complex(n, rho).real(); }

double gamma_by_angular_quadrature(int n, double rho, double tol) {
    if (n < 2) throw Error(ErrorKind::InvalidOrder, "polygon order must be >= 2");
    if (!(rho > 0.0) || rho == 1.0) {
        throw Error(ErrorKind::Domain, "angular Gamma needs rho > 0, rho != 1");
    }
    std::vector<Complex> vertices;
    for (int j = 1; j <= n; ++j) vertices.push_back(root_of_unity(n, j));
    const auto kernel = [&](double theta) {
        const Complex x = std::polar(rho, theta);
        double sum = 0.0;
        for (const Complex& a : vertices) {
            const Complex y = x - a;
            sum += (a * a / (y * y * (1.0 + std::norm(y)))).real();
        }
        return sum;
    };
    // Sharply peaked near rho ~ 1; start fine enough to see the peaks.
    const PeriodicMean mean = adaptive_periodic_mean(kernel, 64 * n, tol, tol, 1 << 22);
    return 2.0 * kPi * mean.value;
}

namespace {

/// Integrand of the tail integral in s = rho^2, in its manifestly positive
/// rationalized form, including the Jacobian 1/2.
double tail_density(double s) {
    const double r = std::sqrt(s * s + 4.0);
    return 2.0 / ((s * s + 2.0) * r + s * (s * s + 4.0));
}

}  // namespace

double tail_integral_beyond(double m) {
    const double s = m * m;
    const double d = s + std::sqrt(s * s + 4.0);
    return 2.0 / (d * d);
}

double tail_integral_antiderivative(double m) {
    const double s = m * m;
    // (s/4)(sqrt(s^2+4) - s) without the cancellation.
    return s / (std::sqrt(s * s + 4.0) + s);
}

double tail_integral_partial(double m) {
    if (!(m > 0.0)) throw Error(ErrorKind::Domain, "upper limit must be positive");
    return integrate_adaptive(tail_density, 0.0, m * m, 1e-15, 1e-14).value;
}

double tail_integral_check() {
    const double bulk = integrate_adaptive(tail_density, 0.0, kTailSwitch, 1e-15, 1e-14).value;
    return bulk + tail_integral_beyond(std::sqrt(kTailSwitch));
}

IntegralEstimate rho_gamma_integral(int n, double tol) {
    if (n < 2) throw Error(ErrorKind::InvalidOrder, "polygon order must be >= 2");
    struct Piece {
        double a;
        double b;
    };
    // Gamma is smooth on each side of the jump at rho = 1.
    const Piece pieces[] = {{0.0, 1.0}, {1.0, 5.0}, {5.0, kGammaCutoff}};
    const auto parts = parallel_map<IntegralEstimate>(std::size(pieces), [&](std::size_t i) {
        return integrate_adaptive([&](double rho) { return rho * gamma_by_residue(n, rho); },
                                  pieces[i].a, pieces[i].b, 1e-3 * tol, 1e-3 * tol);
    });
    std::vector<double> values;
    std::vector<double> errors;
    IntegralEstimate out;
    for (const auto& p : parts) {
        values.push_back(p.value);
        errors.push_back(p.error);
        out.evaluations += p.evaluations;
    }
    values.push_back(kPi * n * tail_integral_beyond(kGammaCutoff));
    out.value = pairwise_sum(values);
    out.error = pairwise_sum(errors);
    return out;
}

IntegralEstimate II_by_gamma(int n, double tol) {
    if (!(tol >= 1e-10)) throw Error(ErrorKind::Domain, "II_by_gamma needs tol >= 1e-10");
    IntegralEstimate r = rho_gamma_integral(n, tol);
    const double b = to_double(beta(n));
    r.value *= b;
    r.error *= b;
    return r;
}

}  // namespace glcorr
