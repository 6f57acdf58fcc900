#pragma once

// Closed-form identities for the N-th roots of unity and the correlation
// coefficient of the symmetric polygon configuration. Every closed form
// that has a brute-force counterpart exposes it as a *_direct function.

#include "glcorr/config.hpp"

#include <cstdint>
#include <vector>

namespace glcorr {

/// q * pi with q an exact rational.
struct PiMultiple {
    Rational coefficient;

    double value() const;
    bool operator==(const PiMultiple&) const = default;
};

/// a_j = exp(2*pi*i*(j-1)/N), j = 1..N.
Complex root_of_unity(int n, int j);

/// Sum_{j=1..N} a_j^l: N when N divides l, else 0.
Complex power_sum(int n, long l);
Complex power_sum_direct(int n, long l);

/// Sum_j 1/(x - a_j) = N x^{N-1} / (x^N - 1). Throws Pole when x^N = 1.
Complex pole_sum_closed(int n, Complex x);
Complex pole_sum_direct(int n, Complex x);

/// alpha_k(x) = -(N-1)/(2x) + sum_{j != k} 1/(x - a_j).
Complex alpha(int n, int k, Complex x);

/// alpha_k'(a_k) = (beta_N / 4) a_k^{N-2}.
Complex alpha_prime_at_vortex(int n, int k);
/// The derivative summed term by term at a_k.
Complex alpha_prime_direct(int n, int k);

/// beta_N = (N^2 - 1)/3.
Rational beta(int n);
/// Sum_{j=2..N} 4/|1 - a_j|^2.
double beta_direct(int n);

struct PolyProducts {
    Complex full;       // prod_{j=2..N} (1 - a_j) = N
    Complex without_k;  // prod_{j=2..N, j != k} (1 - a_j)
};

PolyProducts poly_products(int n, int k);
PolyProducts poly_products_direct(int n, int k);

struct TaylorCoefficients {
    std::vector<std::int64_t> c;  // ((N+1)x^N + (N-1))^2 / (1 - x^N)^2 = sum c_k x^{kN}
    std::vector<std::int64_t> d;  // ((N-1)x^N + (N+1))^2 / (1 - x^N)^2 = sum d_k x^{kN}
};

/// Coefficients k = 0..max_k.
TaylorCoefficients taylor_coeffs(int n, int max_k);

/// Bracketed antiderivative f(rho) of the radial reduction of I, for
/// 0 < rho < 1. f(1) is only available as the limit below.
double f_bracket(int n, double rho);
/// lim_{rho -> 1} f(rho) = -(N^2 + 5)/12.
Rational f_limit_at_one(int n);

PiMultiple I_value(int n);   // pi N (N^2 - 1)/3
PiMultiple II_value(int n);  // beta_N * pi N

/// A_0(N, m) = m^4 (I - II)/4, identically zero.
PiMultiple correlation_coefficient(int n, int m);
/// m^4 I / 4: the value obtained when II is dropped.
PiMultiple ovsi_partial(int n, int m);

/// Angular integral of the counterterm kernel on the circle |x| = rho:
/// pi N (rho^4+2)/sqrt(rho^4+4) - pi N rho^2 + (2 pi N rho^2 if rho < 1).
/// Throws Domain at rho = 1 (jump) and for rho <= 0.
double gamma_closed(int n, double rho);

struct GammaJump {
    double inner;  // Gamma(1-)
    double outer;  // Gamma(1+)
};
GammaJump gamma_at_one(int n);

struct ClosedFormConstants {
    int n = 2;
    Rational beta;
    PiMultiple I;
    PiMultiple II;
    PiMultiple A0;
    TaylorCoefficients taylor;
};

ClosedFormConstants closed_form_constants(int n, int max_k = 8);

}  // namespace glcorr
