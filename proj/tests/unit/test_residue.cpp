#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"
#include "glcorr/residue.hpp"

#include "../oracles.hpp"

#include <doctest.h>

using namespace glcorr;

TEST_CASE("residues of simple and double poles") {
    const ContourIntegrand simple{2.0, {{0.5, 1}, {3.0, 1}}};
    CHECK(std::abs(residue(simple, 0) - 2.0 / (0.5 - 3.0)) < 1e-15);
    const ContourIntegrand dbl{1.0, {{0.2, 2}, {-4.0, 1}}};
    // d/dw 1/(w+4) at 0.2
    CHECK(std::abs(residue(dbl, 0) + 1.0 / (4.2 * 4.2)) < 1e-15);
    CHECK_THROWS_AS(residue(dbl, 5), Error);
}

TEST_CASE("unit circle integrals: residues against the trapezoid rule") {
    const ContourIntegrand f{Complex(0.3, 1.0), {{Complex(0.1, 0.4), 2}, {Complex(-2.0, 0.5), 1}, {Complex(0.0, -0.6), 1}}};
    CHECK(std::abs(unit_circle_integral(f) - unit_circle_integral_trapezoid(f, 1024)) < 1e-12);
    // Coincident simple poles merge into a double pole.
    const ContourIntegrand split{1.0, {{0.5, 1}, {0.5, 1}, {2.0, 1}}};
    const ContourIntegrand merged{1.0, {{0.5, 2}, {2.0, 1}}};
    CHECK(std::abs(unit_circle_integral(split) - unit_circle_integral(merged)) < 1e-15);
}

TEST_CASE("residue contract violations") {
    CHECK_THROWS_AS(unit_circle_integral({1.0, {{Complex(1.0 + 1e-12, 0.0), 1}}}), Error);
    try {
        unit_circle_integral({1.0, {{0.5, 3}}});
        FAIL("expected UnsupportedOrder");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnsupportedOrder);
    }
}

TEST_CASE("rho_pm roots") {
    for (double rho : {0.1, 0.9, 1.1, 5.0}) {
        const auto r = rho_pm(rho);
        CHECK(r.rho_minus < 1.0);
        CHECK(r.rho_plus > 1.0);
        CHECK(r.rho_minus * r.rho_plus == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(r.rho_minus + r.rho_plus == doctest::Approx((2.0 + rho * rho) / rho).epsilon(1e-14));
    }
}

TEST_CASE("Gamma by three routes") {
    for (int n : {2, 3, 5}) {
        for (double rho : {0.3, 0.9, 1.1, 3.0}) {
            const double ref = oracle::gamma_theta(n, rho);
            CHECK(std::abs(gamma_by_residue(n, rho) - ref) <= 1e-9);
            CHECK(std::abs(gamma_by_angular_quadrature(n, rho) - ref) <= 1e-9);
            CHECK(std::abs(gamma_closed(n, rho) - ref) <= 1e-9);
            CHECK(std::abs(gamma_by_residue_complex(n, rho).imag()) <= 1e-9);
        }
        CHECK_THROWS_AS(gamma_by_residue(n, 1.0), Error);
    }
}

TEST_CASE("tail integral and its pieces") {
    CHECK(std::abs(tail_integral_check() - 0.5) <= 1e-12);
    CHECK(std::abs(oracle::tail_integral() - 0.5) <= 1e-12);
    for (double m : {0.5, 3.0, 40.0}) {
        CHECK(tail_integral_partial(m) + tail_integral_beyond(m) == doctest::Approx(0.5).epsilon(1e-12));
    }
}

TEST_CASE("int rho Gamma d rho = pi N and II = I") {
    for (int n : {2, 5, 8}) {
        const auto g = rho_gamma_integral(n, 1e-8);
        CHECK(std::abs(g.value - oracle::pi * n) <= 1e-8);
        const auto ii = II_by_gamma(n, 1e-8);
        CHECK(std::abs(ii.value - oracle::half_value(n)) <= 1e-6 * oracle::half_value(n));
    }
    CHECK_THROWS_AS(II_by_gamma(3, 1e-11), Error);
}
