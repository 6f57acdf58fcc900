#include "glcorr/errors.hpp"
#include "glcorr/quadrature.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace glcorr;

TEST_CASE("spec validation") {
    QuadratureSpec s;
    CHECK_NOTHROW(s.validate());
    s.epsilon_schedule = {0.1, 0.05};
    CHECK_THROWS_AS(s.validate(), Error);
    s.epsilon_schedule = {0.1, 0.1, 0.05};
    CHECK_THROWS_AS(s.validate(), Error);
    s = QuadratureSpec{};
    s.angular_samples = 100;
    CHECK_THROWS_AS(s.validate(), Error);
    s = QuadratureSpec{};
    s.outer_radius = -1.0;
    CHECK_THROWS_AS(s.validate(), Error);
    // Regularized route requires the counterterm flag.
    CHECK_THROWS_AS(regularized_integral(3, 1, QuadratureSpec{}), Error);
}

TEST_CASE("partitioned_integral: smooth field plus a zero-mean singular term") {
    // Smooth part integrates to pi; Re(1/x^2) e^{-|x|^2} has PV zero.
    const PlanarField f = [](Complex x) {
        const double r2 = std::norm(x);
        return (1.0 / (x * x)).real() * std::exp(-r2) + 1.0 / ((1.0 + r2) * (1.0 + r2));
    };
    const auto r = partitioned_integral(f, {{0.0, true}}, 1.0, QuadratureSpec{});
    CHECK(std::abs(r.value - oracle::pi) <= std::max(r.error_estimate, 1e-6));
}

TEST_CASE("far field coefficient") {
    for (int n : {2, 5}) {
        for (int m : {1, 3}) {
            double total = 0.0, fourth = 0.0;
            for (const auto& p : oracle::polygon(n, m)) {
                total += p.charge;
                fourth += std::pow(p.charge, 4);
            }
            CHECK(far_field_coefficient(make_symmetric_config(n, m)) == doctest::Approx(std::pow(total, 4) - fourth));
        }
    }
}

TEST_CASE("a single vortex has zero correlation integral") {
    const VortexConfiguration one({{Complex(0.3, 0.1), Rational(5)}});
    const auto r = pv_integral(one, QuadratureSpec{});
    CHECK(r.value == 0.0);
}

TEST_CASE("A_0 by principal value, with m^4 scaling") {
    const QuadratureSpec spec;
    const auto a1 = a0_numeric(3, 1, spec);
    CHECK(std::abs(a1.value) <= 5e-3 * oracle::half_value(3));
    CHECK(a1.extrapolation_table.size() == spec.epsilon_schedule.size());
    const auto a2 = a0_numeric(3, 2, spec);
    CHECK(a2.value == 16.0 * a1.value);
    CHECK_THROWS_AS(a0_numeric(9, 1, spec), Error);
}

TEST_CASE("regularized route and counterterm PV") {
    QuadratureSpec spec;
    const auto pv = pv_integral(make_symmetric_config(4, 1), spec);
    const auto ct = counterterm_pv_integral(4, spec);
    CHECK(std::abs(ct.value) <= ct.error_estimate + 1e-6);
    spec.use_counterterm = true;
    const auto reg = regularized_integral(4, 1, spec);
    CHECK(std::abs(reg.value - pv.value) <= reg.error_estimate + pv.error_estimate);
}

TEST_CASE("annulus split reproduces both halves") {
    const auto s = annulus_split(3, QuadratureSpec{});
    const double ref = oracle::half_value(3);
    CHECK(std::abs(s.I.value - ref) <= 1e-3 * ref);
    CHECK(std::abs(s.II.value - ref) <= 1e-3 * ref);
}
