#pragma once

// Reference values computed without the library's closed forms or
// quadrature engine. Each oracle uses a different formula or a different
// integrator from the code it checks.

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
inline constexpr double pi = std::numbers::pi;

inline Complex vertex(int n, int j) { return std::polar(1.0, 2.0 * pi * (j - 1) / n); }

/// pi N (N^2 - 1)/3, the common value of both halves of A_0.
inline double half_value(int n) { return pi * n * (static_cast<double>(n) * n - 1.0) / 3.0; }

/// 4/|1 - a_j|^2 = 1/sin^2(pi (j-1)/N).
inline double beta_by_sines(int n) {
    double s = 0.0;
    for (int j = 1; j < n; ++j) s += 1.0 / std::pow(std::sin(pi * j / n), 2);
    return s;
}

/// f'(z0) from the trapezoid rule on the circle |z - z0| = r. Exact to
/// rounding once (r / distance to nearest singularity)^samples is negligible.
inline Complex cauchy_derivative(const std::function<Complex(Complex)>& f, Complex z0, double r,
                                 int samples = 128) {
    Complex s = 0.0;
    for (int i = 0; i < samples; ++i) {
        const Complex w = std::polar(1.0, 2.0 * pi * i / samples);
        s += f(z0 + r * w) / w;
    }
    return s / (static_cast<double>(samples) * r);
}

/// alpha_k written as the full pole sum minus the k-th term.
inline Complex alpha_by_subtraction(int n, int k, Complex x) {
    Complex s = -0.5 * (n - 1) / x;
    for (int j = 1; j <= n; ++j) {
        if (j != k) s += 1.0 / (x - vertex(n, j));
    }
    return s;
}

struct Point {
    Complex position;
    double charge;
};

inline std::vector<Point> polygon(int n, double m) {
    std::vector<Point> out{{0.0, -(n - 1) * m / 2.0}};
    for (int j = 1; j <= n; ++j) out.push_back({vertex(n, j), m});
    return out;
}

/// |sum n/(x-a)|^4 - sum |n/(x-a)|^4, evaluated literally.
inline double integrand(Complex x, const std::vector<Point>& pts) {
    Complex s = 0.0;
    double diag = 0.0;
    for (const Point& p : pts) {
        const Complex t = p.charge / (x - p.position);
        s += t;
        diag += std::pow(std::norm(t), 2);
    }
    return std::pow(std::norm(s), 2) - diag;
}

/// |sum n/(x-a)|^4 + sum |n/(x-a)|^4: the size of the two terms whose
/// difference is the integrand.
inline double integrand_scale(Complex x, const std::vector<Point>& pts) {
    Complex s = 0.0;
    double diag = 0.0;
    for (const Point& p : pts) {
        const Complex t = p.charge / (x - p.position);
        s += t;
        diag += std::pow(std::norm(t), 2);
    }
    return std::pow(std::norm(s), 2) + diag;
}

/// Energy H = -pi sum_{i != j} n_i n_j ln|a_i - a_j|.
inline double energy(const std::vector<Point>& pts) {
    double h = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = 0; j < pts.size(); ++j) {
            if (i != j) h -= pi * pts[i].charge * pts[j].charge * std::log(std::abs(pts[i].position - pts[j].position));
        }
    }
    return h;
}

/// Central-difference gradient of energy() as dH/dx + i dH/dy per point.
inline std::vector<Complex> energy_gradient_fd(std::vector<Point> pts, double h = 1e-6) {
    std::vector<Complex> g;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const Complex base = pts[i].position;
        double d[2];
        for (int axis = 0; axis < 2; ++axis) {
            const Complex step = axis == 0 ? Complex(h, 0.0) : Complex(0.0, h);
            pts[i].position = base + step;
            const double up = energy(pts);
            pts[i].position = base - step;
            const double down = energy(pts);
            d[axis] = (up - down) / (2.0 * h);
        }
        pts[i].position = base;
        g.emplace_back(d[0], d[1]);
    }
    return g;
}

/// Gamma(rho) by the theta-integral of one rotated vertex term, times N,
/// with Boost's adaptive trapezoid rule.
inline double gamma_theta(int n, double rho, double tol = 1e-14) {
    auto f = [rho](double theta) {
        const Complex y = std::polar(rho, theta) - 1.0;
        return (1.0 / (y * y * (1.0 + std::norm(y)))).real();
    };
    return n * boost::math::quadrature::trapezoidal(f, 0.0, 2.0 * pi, tol, 24);
}

/// The closed form of Gamma(rho) typed in directly.
inline double gamma_formula(int n, double rho) {
    const double r4 = std::pow(rho, 4);
    double g = pi * n * (r4 + 2.0) / std::sqrt(r4 + 4.0) - pi * n * rho * rho;
    if (rho < 1.0) g += 2.0 * pi * n * rho * rho;
    return g;
}

/// int_0^inf rho((rho^4+2)/sqrt(rho^4+4) - rho^2) d rho by exp-sinh, with
/// the difference rationalized.
inline double tail_integral() {
    auto f = [](double rho) {
        const double r4 = rho * rho * rho * rho;
        const double root = std::sqrt(r4 + 4.0);
        return 4.0 * rho / (root * ((r4 + 2.0) + rho * rho * root));
    };
    boost::math::quadrature::exp_sinh<double> integrator;
    return integrator.integrate(f);
}

/// Ordinary least-squares slope of y against x.
inline double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace oracle
