#pragma once

// Contour integrals over the unit circle by residues, and the angular
// integral Gamma(rho) of the counterterm kernel built on them.

#include "glcorr/numerics.hpp"

#include <vector>

namespace glcorr {

struct Pole {
    Complex location;
    int order = 1;
};

/// factor / prod_p (w - p)^order_p.
struct ContourIntegrand {
    Complex factor = 1.0;
    std::vector<Pole> poles;

    Complex operator()(Complex w) const;
};

/// Poles closer than this to |w| = 1 are rejected.
inline constexpr double kCircleGuard = 1e-9;

struct QuadraticRoots {
    double rho = 0.0;
    double rho_minus = 0.0;
    double rho_plus = 0.0;
};

/// Roots of w^2 - ((2 + rho^2)/rho) w + 1, ordered rho_minus < 1 < rho_plus.
QuadraticRoots rho_pm(double rho);

/// Residue at poles[index]; orders 1 and 2 only.
Complex residue(const ContourIntegrand& f, std::size_t index);

/// 2*pi*i times the sum of residues inside the unit circle (or minus the sum
/// outside, when that is better conditioned). Coincident poles
/// are merged first. Throws Conditioning for a pole within kCircleGuard of
/// the circle and UnsupportedOrder for orders above 2.
Complex unit_circle_integral(const ContourIntegrand& f);

/// The same integral by the trapezoid rule on w = e^{i theta}.
Complex unit_circle_integral_trapezoid(const ContourIntegrand& f, int samples);

/// The w-form of the angular integral of the j-th counterterm term on
/// |x| = rho: (i/rho^3) a_j^3 / ((w - a_j/rho)^2 (w - rho_- a_j)(w - rho_+ a_j)).
ContourIntegrand gamma_integrand(int n, int j, double rho);

/// Sum over j of unit_circle_integral(gamma_integrand(n, j, rho)). The
/// imaginary part vanishes up to rounding.
Complex gamma_by_residue_complex(int n, double rho);
double gamma_by_residue(int n, double rho);

/// Gamma(rho) as the angular integral of the counterterm kernel (without
/// beta_N) over |x| = rho, by adaptive trapezoid sums.
double gamma_by_angular_quadrature(int n, double rho, double tol = 1e-13);

/// int_0^inf rho ((rho^4+2)/sqrt(rho^4+4) - rho^2) d rho, by quadrature in
/// s = rho^2 up to s = kTailSwitch plus the closed tail beyond it.
double tail_integral_check();
/// Quadrature of the same integrand over (0, M).
double tail_integral_partial(double m);
/// The closed antiderivative at M, (s/4)sqrt(s^2+4) - s^2/4 with s = M^2.
double tail_integral_antiderivative(double m);
/// Closed form of the integral over (M, inf).
double tail_integral_beyond(double m);

/// int_0^inf rho Gamma(rho) d rho with Gamma from residues, split at rho = 1
/// and with the closed tail beyond rho = kGammaCutoff.
inline constexpr double kGammaCutoff = 50.0;
IntegralEstimate rho_gamma_integral(int n, double tol);

/// II = beta_N * int_0^inf rho Gamma(rho) d rho. Throws Domain for
/// tol < 1e-10.
IntegralEstimate II_by_gamma(int n, double tol);

}  // namespace glcorr
