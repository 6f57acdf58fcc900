#include "glcorr/config.hpp"

#include "glcorr/errors.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace glcorr {

VortexConfiguration::VortexConfiguration(std::vector<Vortex> vortices)
    : vortices_(std::move(vortices)) {
    if (vortices_.empty()) {
        throw Error(ErrorKind::DegenerateConfiguration, "configuration needs at least one vortex");
    }
    positions_.reserve(vortices_.size());
    charges_.reserve(vortices_.size());
    for (const Vortex& v : vortices_) {
        if (!std::isfinite(v.position.real()) || !std::isfinite(v.position.imag())) {
            throw Error(ErrorKind::DegenerateConfiguration, "non-finite vortex position");
        }
        positions_.push_back(v.position);
        charges_.push_back(to_double(v.charge));
    }
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (positions_[i] == positions_[j]) {
                throw Error(ErrorKind::DegenerateConfiguration,
                            "vortices " + std::to_string(j) + " and " + std::to_string(i) +
                                " coincide");
            }
        }
    }
}

VortexConfiguration VortexConfiguration::scaled(double lambda) const {
    if (!(lambda > 0.0)) throw Error(ErrorKind::Domain, "scale factor must be positive");
    std::vector<Vortex> out = vortices_;
    for (Vortex& v : out) v.position *= lambda;
    return VortexConfiguration(std::move(out));
}

double VortexConfiguration::min_separation() const {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < positions_.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            best = std::min(best, std::abs(positions_[i] - positions_[j]));
        }
    }
    return best;
}

Rational VortexConfiguration::total_charge() const {
    Rational sum = 0;
    for (const Vortex& v : vortices_) sum += v.charge;
    return sum;
}

Rational SymmetricPolygon::center_charge() const {
    return Rational(-(order - 1) * static_cast<std::int64_t>(outer_charge), 2);
}

VortexConfiguration SymmetricPolygon::configuration() const {
    if (order < 2) {
        throw Error(ErrorKind::InvalidOrder,
                    "polygon order must be >= 2, got " + std::to_string(order));
    }
    std::vector<Vortex> vortices;
    vortices.reserve(static_cast<std::size_t>(order) + 1);
    vortices.push_back({Complex(0.0, 0.0), center_charge()});
    for (int j = 0; j < order; ++j) {
        // Exact 1 for j = 0 so a_1 = 1 holds bit-for-bit.
        const Complex a = j == 0 ? Complex(1.0, 0.0)
                                 : std::polar(1.0, 2.0 * std::numbers::pi * j / order);
        vortices.push_back({a, Rational(outer_charge)});
    }
    return VortexConfiguration(std::move(vortices));
}

VortexConfiguration make_symmetric_config(int n, int m) {
    return SymmetricPolygon{n, m}.configuration();
}

Complex field_sum(Complex x, const VortexConfiguration& cfg) {
    const auto pos = cfg.positions();
    const auto q = cfg.charges();
    Complex sum = 0.0;
    for (std::size_t j = 0; j < pos.size(); ++j) {
        const Complex d = x - pos[j];
        if (d == 0.0) throw Error(ErrorKind::Pole, "field evaluated at a vortex position");
        sum += q[j] / d;
    }
    return sum;
}

double PairwiseEnergy::gradient_norm() const {
    double s = 0.0;
    for (const Complex& g : gradient) s += std::norm(g);
    return std::sqrt(s);
}

PairwiseEnergy pairwise_energy(const VortexConfiguration& cfg) {
    const auto pos = cfg.positions();
    const auto q = cfg.charges();
    const std::size_t k = pos.size();
    PairwiseEnergy out;
    out.gradient.assign(k, Complex(0.0, 0.0));
    // Ordered pairs: every unordered pair enters twice, as written for H.
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            const Complex d = pos[i] - pos[j];
            const double dist2 = std::norm(d);
            if (dist2 == 0.0) {
                throw Error(ErrorKind::DegenerateConfiguration, "coincident vortex positions");
            }
            const double w = q[i] * q[j];
            out.value += -std::numbers::pi * w * 0.5 * std::log(dist2);
            const Complex g = -std::numbers::pi * w * d / dist2;
            out.gradient[i] += g;
            out.gradient[j] -= g;
        }
    }
    return out;
}

nlohmann::json to_json(const VortexConfiguration& cfg) {
    nlohmann::json list = nlohmann::json::array();
    for (const Vortex& v : cfg.vortices()) {
        list.push_back({{"re", v.position.real()},
                        {"im", v.position.imag()},
                        {"charge_num", v.charge.numerator()},
                        {"charge_den", v.charge.denominator()}});
    }
    return {{"vortices", list}};
}

VortexConfiguration config_from_json(const nlohmann::json& doc) {
    std::vector<Vortex> vortices;
    for (const auto& item : doc.at("vortices")) {
        const auto den = item.at("charge_den").get<std::int64_t>();
        if (den == 0) throw Error(ErrorKind::DegenerateConfiguration, "zero charge denominator");
        vortices.push_back({Complex(item.at("re").get<double>(), item.at("im").get<double>()),
                            Rational(item.at("charge_num").get<std::int64_t>(), den)});
    }
    return VortexConfiguration(std::move(vortices));
}

}  // namespace glcorr
