#include "glcorr/algebra.hpp"

#include "glcorr/errors.hpp"

#include <cassert>
#include <cmath>
#include <numbers>
#include <string>

namespace glcorr {

namespace {

void require_order(int n) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidOrder, "polygon order must be >= 2, got " + std::to_string(n));
    }
}

void require_index(int n, int k, int first) {
    if (k < first || k > n) {
        throw Error(ErrorKind::Domain, "vertex index " + std::to_string(k) + " outside [" +
                                           std::to_string(first) + ", " + std::to_string(n) + "]");
    }
}

Complex int_pow(Complex x, int e) {
    Complex result = 1.0;
    Complex base = x;
    for (unsigned u = static_cast<unsigned>(e); u != 0; u >>= 1) {
        if (u & 1u) result *= base;
        base *= base;
    }
    return result;
}

long floor_mod(long a, long n) {
    const long r = a % n;
    return r < 0 ? r + n : r;
}

}  // namespace

double PiMultiple::value() const { return to_double(coefficient) * std::numbers::pi; }

Complex root_of_unity(int n, int j) {
    require_order(n);
    require_index(n, j, 1);
    if (j == 1) return {1.0, 0.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * (j - 1) / n);
}

Complex power_sum(int n, long l) {
    require_order(n);
    return floor_mod(l, n) == 0 ? Complex(n, 0.0) : Complex(0.0, 0.0);
}

Complex power_sum_direct(int n, long l) {
    require_order(n);
    Complex sum = 0.0;
    for (int j = 1; j <= n; ++j) sum += std::pow(root_of_unity(n, j), static_cast<double>(l));
    return sum;
}

Complex pole_sum_closed(int n, Complex x) {
    require_order(n);
    const Complex xn = int_pow(x, n);
    const Complex denom = xn - 1.0;
    if (std::abs(denom) <= 1e-15 * std::max(1.0, std::abs(xn))) {
        throw Error(ErrorKind::Pole, "x^N = 1: x is a polygon vertex");
    }
    return static_cast<double>(n) * int_pow(x, n - 1) / denom;
}

Complex pole_sum_direct(int n, Complex x) {
    require_order(n);
    Complex sum = 0.0;
    for (int j = 1; j <= n; ++j) {
        const Complex d = x - root_of_unity(n, j);
        if (d == 0.0) throw Error(ErrorKind::Pole, "x is a polygon vertex");
        sum += 1.0 / d;
    }
    return sum;
}

Complex alpha(int n, int k, Complex x) {
    require_order(n);
    require_index(n, k, 1);
    if (x == 0.0) throw Error(ErrorKind::Pole, "alpha_k has a pole at the origin");
    Complex sum = -0.5 * (n - 1) / x;
    for (int j = 1; j <= n; ++j) {
        if (j == k) continue;
        const Complex d = x - root_of_unity(n, j);
        if (d == 0.0) throw Error(ErrorKind::Pole, "alpha_k has a pole at a_" + std::to_string(j));
        sum += 1.0 / d;
    }
    return sum;
}

Complex alpha_prime_at_vortex(int n, int k) {
    require_order(n);
    require_index(n, k, 1);
    const long power = floor_mod(static_cast<long>(k - 1) * (n - 2), n);
    return 0.25 * to_double(beta(n)) * root_of_unity(n, static_cast<int>(power) + 1);
}

Complex alpha_prime_direct(int n, int k) {
    require_order(n);
    require_index(n, k, 1);
    const Complex ak = root_of_unity(n, k);
    Complex sum = 0.5 * (n - 1) / (ak * ak);
    for (int j = 1; j <= n; ++j) {
        if (j == k) continue;
        const Complex d = ak - root_of_unity(n, j);
        sum -= 1.0 / (d * d);
    }
    return sum;
}

Rational beta(int n) {
    require_order(n);
    return Rational(static_cast<std::int64_t>(n) * n - 1, 3);
}

double beta_direct(int n) {
    require_order(n);
    double sum = 0.0;
    for (int j = 2; j <= n; ++j) sum += 4.0 / std::norm(1.0 - root_of_unity(n, j));
    return sum;
}

PolyProducts poly_products(int n, int k) {
    require_order(n);
    require_index(n, k, 2);
    const Complex ak = root_of_unity(n, k);
    Complex sum = 0.0;
    Complex power = 1.0;
    for (int l = 0; l <= n - 2; ++l) {
        sum += static_cast<double>(n - l - 1) * power;
        power *= ak;
    }
    return {Complex(n, 0.0), sum};
}

PolyProducts poly_products_direct(int n, int k) {
    require_order(n);
    require_index(n, k, 2);
    Complex full = 1.0;
    Complex without = 1.0;
    for (int j = 2; j <= n; ++j) {
        const Complex factor = 1.0 - root_of_unity(n, j);
        full *= factor;
        if (j != k) without *= factor;
    }
    return {full, without};
}

TaylorCoefficients taylor_coeffs(int n, int max_k) {
    require_order(n);
    if (max_k < 0) throw Error(ErrorKind::Domain, "number of Taylor terms must be >= 0");
    const std::int64_t nn = n;
    TaylorCoefficients out;
    out.c.reserve(static_cast<std::size_t>(max_k) + 1);
    out.d.reserve(static_cast<std::size_t>(max_k) + 1);
    for (std::int64_t k = 0; k <= max_k; ++k) {
        const std::int64_t c = k == 0 ? (nn - 1) * (nn - 1) : 4 * nn * (k * nn - 1);
        const std::int64_t d = k == 0 ? (nn + 1) * (nn + 1) : 4 * nn * (k * nn + 1);
        // The max{.,.} notation for the same coefficients.
        assert(c == std::max(4 * nn * (k * nn - 1), (nn - 1) * (nn - 1)));
        assert(d == std::max(4 * nn * (k * nn + 1), (nn + 1) * (nn + 1)));
        out.c.push_back(c);
        out.d.push_back(d);
    }
    return out;
}

double f_bracket(int n, double rho) {
    require_order(n);
    if (!(rho > 0.0 && rho < 1.0)) {
        throw Error(ErrorKind::Domain, "f(rho) is evaluated on 0 < rho < 1 only");
    }
    const double r2 = rho * rho;
    const double r4 = r2 * r2;
    const double lead = std::pow(rho, 2 * n - 2);
    const double one_minus_q = -std::expm1(2.0 * n * std::log(rho));
    double geometric = 0.0;  // sum_{j<N} rho^{2j}
    double power = 1.0;
    for (int j = 0; j < n; ++j) {
        geometric += power;
        power *= r2;
    }
    const double nd = n;
    const double numerator = nd * nd * lead * (1.0 + r4) - nd * lead * (1.0 - r4) * one_minus_q -
                             2.0 * r2 * geometric * geometric;
    return 0.5 * numerator / (one_minus_q * one_minus_q);
}

Rational f_limit_at_one(int n) {
    require_order(n);
    return Rational(-(static_cast<std::int64_t>(n) * n + 5), 12);
}

PiMultiple I_value(int n) {
    require_order(n);
    const std::int64_t nn = n;
    return {Rational(nn * (nn * nn - 1), 3)};
}

PiMultiple II_value(int n) { return {beta(n) * Rational(n)}; }

PiMultiple correlation_coefficient(int n, int m) {
    const std::int64_t mm = m;
    return {Rational(mm * mm * mm * mm) * (I_value(n).coefficient - II_value(n).coefficient) /
            Rational(4)};
}

PiMultiple ovsi_partial(int n, int m) {
    const std::int64_t mm = m;
    return {Rational(mm * mm * mm * mm) * I_value(n).coefficient / Rational(4)};
}

double gamma_closed(int n, double rho) {
    require_order(n);
    if (!(rho > 0.0)) throw Error(ErrorKind::Domain, "Gamma(rho) needs rho > 0");
    if (rho == 1.0) {
        throw Error(ErrorKind::Domain, "Gamma jumps by 2*pi*N at rho = 1; use gamma_at_one");
    }
    const double r2 = rho * rho;
    const double r4 = r2 * r2;
    // (rho^4+2)/sqrt(rho^4+4) - rho^2, rationalized to avoid cancellation.
    const double smooth = 4.0 / ((r4 + 2.0) * std::sqrt(r4 + 4.0) + r2 * (r4 + 4.0));
    const double pin = std::numbers::pi * n;
    return pin * smooth + (rho < 1.0 ? 2.0 * pin * r2 : 0.0);
}

GammaJump gamma_at_one(int n) {
    require_order(n);
    const double pin = std::numbers::pi * n;
    const double smooth = 3.0 / std::sqrt(5.0) - 1.0;
    return {pin * smooth + 2.0 * pin, pin * smooth};
}

ClosedFormConstants closed_form_constants(int n, int max_k) {
    ClosedFormConstants out;
    out.n = n;
    out.beta = beta(n);
    out.I = I_value(n);
    out.II = II_value(n);
    out.A0 = correlation_coefficient(n, 1);
    out.taylor = taylor_coeffs(n, max_k);
    return out;
}

}  // namespace glcorr
