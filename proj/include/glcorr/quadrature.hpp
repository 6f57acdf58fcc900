#pragma once

// Principal-value quadrature of planar fields with point singularities,
// independent of the closed forms. The plane is split with a smooth
// partition of unity: polar patches around each singular centre and
// origin-centred rings for the rest, plus an analytic far-field tail.

#include "glcorr/config.hpp"
#include "glcorr/integrand.hpp"
#include "glcorr/numerics.hpp"

#include <vector>

namespace glcorr {

struct QuadratureSpec {
    std::vector<double> epsilon_schedule{0.1, 0.05, 0.025};
    double outer_radius = 50.0;
    int angular_samples = 512;
    double radial_tol = 1e-8;
    bool use_counterterm = false;

    /// Checks the configuration-independent invariants; throws InvalidSpec.
    void validate() const;
};

/// A singular point of the field. Excluded centres get an eps-ball removed
/// (principal value); the others are integrated through, which requires the
/// ring means around them to be integrable against r dr.
struct SingularCentre {
    Complex position;
    bool excluded = true;
};

/// Integral of `field` over the disc |x| < R minus eps-balls around the
/// excluded centres, for each eps in the schedule, plus
/// pi * far_coefficient / R^2 for the part beyond R (the field must behave
/// like far_coefficient / |x|^4 there). Extrapolated to eps -> 0.
QuadratureResult partitioned_integral(const PlanarField& field,
                                      const std::vector<SingularCentre>& centres,
                                      double far_coefficient, const QuadratureSpec& spec);

/// PV integral of raw_integrand over the plane.
QuadratureResult pv_integral(const VortexConfiguration& cfg, const QuadratureSpec& spec);

/// PV integral of the counterterm alone, excluding the polygon vertices.
QuadratureResult counterterm_pv_integral(int n, const QuadratureSpec& spec);

/// Integral of raw_integrand - m^4 counterterm with only the origin excluded.
/// Requires spec.use_counterterm.
QuadratureResult regularized_integral(int n, int m, const QuadratureSpec& spec);

/// The two halves of the regularized integral (m = 1) over the plane minus the
/// annulus 1-eps <= |x| <= 1/(1-eps), each extrapolated to eps -> 0:
/// I from the raw integrand and II from the counterterm.
struct AnnulusSplit {
    QuadratureResult I;
    QuadratureResult II;
};
AnnulusSplit annulus_split(int n, const QuadratureSpec& spec);

/// A_0 estimate: pv_integral/4 of the m = 1 polygon, times m^4. N <= 8.
QuadratureResult a0_numeric(int n, int m, const QuadratureSpec& spec);

/// Far-field coefficient (sum n_j)^4 - sum n_j^4 of a configuration.
double far_field_coefficient(const VortexConfiguration& cfg);

}  // namespace glcorr
