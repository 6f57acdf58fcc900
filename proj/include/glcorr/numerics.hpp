#pragma once

// Numerical building blocks shared by the series, residue and quadrature
// layers: adaptive Gauss-Kronrod, periodic trapezoid means, Richardson
// extrapolation, pairwise summation and a deterministic parallel map.

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace glcorr {

using Complex = std::complex<double>;

struct IntegralEstimate {
    double value = 0.0;
    double error = 0.0;
    std::size_t evaluations = 0;
};

struct ExtrapolationEntry {
    double epsilon = 0.0;
    double value = 0.0;
};

/// A limit value obtained by extrapolating partial values in a cut-off
/// parameter epsilon -> 0.
struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    std::size_t evaluations = 0;
    std::vector<ExtrapolationEntry> extrapolation_table;
    double fitted_exponent = 0.0;  // NaN when the table does not determine it
};

/// Sum in a fixed binary-tree order. The result depends only on the input
/// sequence, never on how the values were produced.
double pairwise_sum(std::span<const double> values);

/// Adaptive Gauss-Kronrod (10/21 point) on [a, b]. Subdivides the interval
/// with the largest error estimate until the total error is below
/// max(abs_tol, rel_tol * |I|). Throws NonConvergence when `max_intervals`
/// is exhausted. Never evaluates `f` at the endpoints.
IntegralEstimate integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                                    double abs_tol, double rel_tol, int max_intervals = 4000);

/// Mean of a 2*pi-periodic function over `samples` equispaced angles,
/// theta_k = 2*pi*k/samples.
double periodic_mean(const std::function<double(double)>& f, int samples);

struct PeriodicMean {
    double value = 0.0;
    double error = 0.0;  // |T_M - T_{M/2}| at acceptance
    int samples = 0;
};

/// Trapezoid mean with sample doubling, starting at `start_samples`, until two
/// successive levels agree within max(abs_tol, rel_tol * |mean|), or within
/// the rounding level 1e-14 * max |sample|.
PeriodicMean adaptive_periodic_mean(const std::function<double(double)>& f, int start_samples,
                                    double abs_tol, double rel_tol, int max_samples = 1 << 18);

struct RichardsonResult {
    double value = 0.0;
    double error = 0.0;  // spread between the last two extrapolation levels
    std::vector<std::vector<double>> table;
};

/// Richardson extrapolation h -> 0 of values v(h_i), assuming
/// v(h) = v0 + c1 h^p1 + c2 h^p2 + ... with the given exponents. Step sizes
/// must be strictly decreasing and positive; any ratio is allowed.
RichardsonResult richardson(std::span<const double> steps, std::span<const double> values,
                            std::span<const double> exponents);

/// Leading exponent p of v(h) - v0 ~ c h^p fitted from the last three entries.
/// Returns NaN when the successive differences vanish or change sign.
double fitted_exponent(std::span<const double> steps, std::span<const double> values);

/// Extrapolates partial values v(eps_i) to eps -> 0 with Richardson
/// exponents 1, 2, ..., and packages the table. The error estimate is the
/// spread of the last two extrapolation levels plus `quadrature_error`.
/// Throws NonConvergence (diagnostics = the partial values) when the table is
/// not monotone in eps or its successive differences do not shrink, beyond
/// the noise level set by `quadrature_error`.
QuadratureResult extrapolate_limit(std::span<const double> epsilons, std::span<const double> values,
                                   double quadrature_error, std::size_t evaluations);

/// Worker count: set_thread_count() override if positive, else the
/// GLCORR_THREADS environment variable, else hardware concurrency.
int thread_count();
void set_thread_count(int threads);

/// Evaluates fn(0..n-1) on up to thread_count() workers. Each result is
/// stored at its own index, so the output is independent of scheduling.
template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn);

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

template <typename T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& fn) {
    std::vector<T> out(n);
    parallel_for(n, [&](std::size_t i) { out[i] = fn(i); });
    return out;
}

}  // namespace glcorr
