#pragma once

// Vortex configurations, the summed vortex field and the pairwise
// interaction energy H.

#include <boost/rational.hpp>
#include <json.hpp>

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace glcorr {

using Complex = std::complex<double>;
using Rational = boost::rational<std::int64_t>;

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

struct Vortex {
    Complex position;
    Rational charge;
};

/// Ordered list of vortices with pairwise distinct positions. Charges are
/// exact rationals; a double copy is cached for the pointwise evaluators.
class VortexConfiguration {
public:
    explicit VortexConfiguration(std::vector<Vortex> vortices);

    std::span<const Vortex> vortices() const { return vortices_; }
    std::span<const Complex> positions() const { return positions_; }
    std::span<const double> charges() const { return charges_; }
    std::size_t size() const { return vortices_.size(); }

    /// Same charges, positions multiplied by lambda > 0.
    VortexConfiguration scaled(double lambda) const;

    /// Smallest pairwise distance; +infinity for a single vortex.
    double min_separation() const;

    Rational total_charge() const;

    bool operator==(const VortexConfiguration& other) const { return vortices_ == other.vortices_; }

private:
    std::vector<Vortex> vortices_;
    std::vector<Complex> positions_;
    std::vector<double> charges_;
};

inline bool operator==(const Vortex& a, const Vortex& b) {
    return a.position == b.position && a.charge == b.charge;
}

/// The 2*pi/N-symmetric polygon: a_0 = 0 with n_0 = -(N-1)m/2, and
/// a_j = exp(2*pi*i*(j-1)/N) with n_j = m for j = 1..N.
struct SymmetricPolygon {
    int order = 2;         // N
    int outer_charge = 1;  // m

    Rational center_charge() const;
    VortexConfiguration configuration() const;
};

/// Throws InvalidOrder for n < 2.
VortexConfiguration make_symmetric_config(int n, int m);

/// Sum_j n_j / (x - a_j). Throws Pole when x is a vortex position.
Complex field_sum(Complex x, const VortexConfiguration& cfg);

struct PairwiseEnergy {
    double value = 0.0;
    std::vector<Complex> gradient;  // dH/dx + i dH/dy per vortex

    double gradient_norm() const;
};

/// H = -pi * sum over ordered pairs i != j of n_i n_j ln|a_i - a_j|, with its
/// analytic gradient. Throws DegenerateConfiguration on coincident positions.
PairwiseEnergy pairwise_energy(const VortexConfiguration& cfg);

/// {"vortices":[{"re":..,"im":..,"charge_num":..,"charge_den":..}, ...]}
nlohmann::json to_json(const VortexConfiguration& cfg);
VortexConfiguration config_from_json(const nlohmann::json& doc);

}  // namespace glcorr
