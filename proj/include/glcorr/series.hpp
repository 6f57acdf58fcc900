#pragma once

// Radial reduction of the term I: the angular integral of the correlation
// integrand on |x| = rho is evaluated exactly through Fourier (Parseval)
// coefficients, leaving one-dimensional radial densities.

#include "glcorr/numerics.hpp"

#include <span>

namespace glcorr {

enum class Region { Inner, Outer };

struct ParsevalCheck {
    double angular = 0.0;          // (1/2pi) int |sum g_k e^{ik theta}|^2 d theta
    double coefficient_sum = 0.0;  // sum |g_k|^2
};

ParsevalCheck parseval_check(std::span<const Complex> coeffs, int samples);

struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    int terms = 0;
};

/// rho times the angular mean of the correlation integrand (m = 1) on the
/// circle |x| = rho, as a power series in rho (inner, rho < 1) or 1/rho
/// (outer, rho > 1). Integrating 2*pi*density over rho gives I.
class RadialDensity {
public:
    static constexpr int kMaxTerms = 1'000'000;

    RadialDensity(int n, Region region, double tolerance);

    /// Truncated so the geometric tail bound is at most
    /// tolerance * (sum of the magnitudes of the partial sums).
    /// Throws TruncationFailure when that needs more than kMaxTerms terms and
    /// Domain when rho is on the wrong side of 1.
    SeriesValue evaluate(double rho) const;

    /// Fixed truncation: terms k = 0..max_k of every series.
    SeriesValue truncated(double rho, int max_k) const;

    /// Closed rational form of the same density.
    double closed(double rho) const;

    /// Inner: integral over (0, rho). Outer: integral over (rho, infinity).
    double antiderivative(double rho) const;

    int order() const { return n_; }
    Region region() const { return region_; }
    double tolerance() const { return tolerance_; }

private:
    void check_domain(double rho) const;

    int n_;
    Region region_;
    double tolerance_;
};

double radial_density(int n, double rho, Region region, double tolerance = 1e-14);

/// Half-width of the zone around rho = 1 where the radial integrals switch
/// from quadrature of the truncated series to the closed antiderivatives.
inline constexpr double kSeriesSwitch = 1e-2;

/// Default cut-offs for the excluded annulus 1-eps <= |x| <= 1/(1-eps).
inline constexpr double kSeriesEpsilons[] = {1e-2, 5e-3, 2.5e-3};

/// I = lim 2*pi [int_0^{1-eps} inner + int_{1/(1-eps)}^inf outer], with the
/// limit taken by Richardson extrapolation over kSeriesEpsilons.
/// Throws Domain for tol < 1e-12 and NonConvergence (carrying the
/// eps-sequence) when the partial values do not settle.
QuadratureResult I_by_series(int n, double tol);

/// The same limit via the closed bracket: 2*pi*N f(1-eps) + N(N^2+1)pi/2.
QuadratureResult I_by_f_bracket(int n);

}  // namespace glcorr
