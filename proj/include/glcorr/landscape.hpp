#pragma once

// Energy landscape of the polygon configuration of radius l: the
// renormalized energy W(l) and the model energy 3 pi l^6 + J (l k)^{-2},
// whose minimizer scales like k^{-1/4}.

#include <span>
#include <string>
#include <vector>

namespace glcorr {

struct ModelEnergyParams {
    double J = 0.0;  // correlation constant, user supplied
    double k = 1.0;  // Ginzburg-Landau parameter, k > 0
};

/// -6 pi ln 3 - 6 pi ln(1 - l^6), 0 <= l < 1 (the O(l^9) remainder is dropped).
double renormalized_W(double l);

/// 3 pi l^6 + J (l k)^{-2}, l > 0.
double model_energy(double l, const ModelEnergyParams& p);
double model_energy_derivative(double l, const ModelEnergyParams& p);
double model_energy_second_derivative(double l, const ModelEnergyParams& p);

/// Closed-form minimizer (J / (9 pi))^{1/8} k^{-1/4}. Throws
/// NoInteriorMinimum for J <= 0 and Domain for k <= 0.
double minimize_model(const ModelEnergyParams& p);

/// Golden-section search on [1/k, 1) (widened if the minimizer lies outside),
/// 200 iterations.
double minimize_model_golden(const ModelEnergyParams& p);

/// A(a) = A_0 / a^2 for the polygon of radius a: identically zero.
double second_order_term(int n, int m, double a);
/// The same with A_0 replaced by m^4 I / 4, the value obtained when II is
/// dropped.
double second_order_term_without_II(int n, int m, double a);

struct SweepRow {
    double k = 0.0;
    double J = 0.0;
    double l_star = 0.0;
    double energy_at_min = 0.0;
};

std::vector<SweepRow> landscape_sweep(double J, std::span<const double> ks);

/// Least-squares slope of ln l_star against ln k.
double fitted_slope(std::span<const SweepRow> rows);

/// CSV with header k,J,l_star,energy_at_min and 17 significant digits.
std::string sweep_csv(std::span<const SweepRow> rows);

}  // namespace glcorr
