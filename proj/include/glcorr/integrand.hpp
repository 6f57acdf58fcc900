#pragma once

// Pointwise fields on the plane: the correlation integrand, the counterterm
// that makes it absolutely integrable away from the origin, and the local
// singular models at the origin and at the polygon vertices.

#include "glcorr/config.hpp"

#include <functional>
#include <vector>

namespace glcorr {

using PlanarField = std::function<double(Complex)>;
using ExtendedComplex = std::complex<long double>;
using ExtendedField = std::function<long double(ExtendedComplex)>;

/// |sum_j n_j/(x-a_j)|^4 - sum_j |n_j/(x-a_j)|^4.
///
/// Evaluated around the dominant vortex term u = n_k/(x-a_k) as
/// (|S|^2 - |u|^2)(|S|^2 + |u|^2) - sum_{j != k}|n_j/(x-a_j)|^4 so the
/// |u|^4 cancellation near a vortex happens analytically.
double raw_integrand(Complex x, const VortexConfiguration& cfg);

/// Singular term of the counterterm belonging to vertex j (1-based):
/// Re[beta_N a_j^2 / ((x-a_j)^2 (1 + |x-a_j|^2))].
double counterterm_component(Complex x, int n, int j);

/// Sum of counterterm_component over j = 1..N.
double counterterm(Complex x, int n);

/// counterterm() with the vertices and beta_N precomputed, for hot loops.
class Counterterm {
public:
    explicit Counterterm(int n);

    double operator()(Complex x) const;
    double component(Complex x, int j) const;
    /// component() at x = a_j + y, with the offset y given exactly.
    double component_at_offset(Complex y, int j) const;
    long double component_at_offset(ExtendedComplex y, int j) const;
    int order() const { return static_cast<int>(vertices_.size()); }

private:
    std::vector<Complex> vertices_;
    std::vector<Complex> weights_;  // beta_N a_j^2
    std::vector<ExtendedComplex> extended_weights_;
};

/// Leading singular behavior at the origin,
/// -N(N-1)^3/2 * Re(x^N / ((x^N - 1)|x|^4)), for 0 < |x| < 1.
double near_zero_model(Complex x, int n);
long double near_zero_model(ExtendedComplex x, int n);

/// Leading singular behavior at a_k, 4 Re[alpha_k'(a_k)(x-a_k)^2]/|x-a_k|^4,
/// for 0 < |x - a_k| < 1/2.
double near_vortex_model(Complex x, int n, int k);

/// near_vortex_model at x = a_k + y. Points close to a_k keep full relative
/// precision because y is not recovered by cancellation.
double near_vortex_model_at_offset(Complex y, int n, int k);
long double near_vortex_model_at_offset(ExtendedComplex y, int n, int k);

/// Trapezoid mean of f over `samples` equispaced points on the circle.
/// Throws Domain for samples < 16 and Evaluation on a non-finite sample.
double circle_average(const PlanarField& f, Complex center, double radius, int samples);

struct CircleStatistics {
    double mean = 0.0;
    double max_abs = 0.0;  // largest |sample|, the rounding scale of the mean
};

/// Trapezoid mean of g(y) over y = radius * e^{i theta}, for fields written in
/// terms of the offset from the circle's centre.
CircleStatistics circle_statistics(const PlanarField& offset_field, double radius, int samples);

/// The same in long double throughout. Near a singular point the samples
/// are of size 1/radius^2 while the mean is zero, so in double the mean
/// cannot be resolved below about 1e-16 / radius^2.
CircleStatistics circle_statistics_extended(const ExtendedField& offset_field, double radius, int samples);

/// The correlation integrand of the unit symmetric polygon (outer charge m),
/// optionally with the counterterm (scaled by m^4) and/or the origin model
/// subtracted.
class RegularizedField {
public:
    RegularizedField(int n, int m, bool subtract_counterterm, bool subtract_near_zero_model);

    double operator()(Complex x) const;

    const VortexConfiguration& configuration() const { return cfg_; }
    int order() const { return n_; }
    int outer_charge() const { return m_; }

private:
    VortexConfiguration cfg_;
    int n_;
    int m_;
    double m4_;
    Counterterm counterterm_;
    bool subtract_counterterm_;
    bool subtract_near_zero_model_;
};

}  // namespace glcorr
