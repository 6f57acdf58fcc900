#include "glcorr/errors.hpp"
#include "glcorr/integrand.hpp"
#include "glcorr/series.hpp"

#include "../oracles.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <doctest.h>

using namespace glcorr;

TEST_CASE("Parseval: coefficient sum equals the angular mean") {
    const std::vector<Complex> g{{1.0, 2.0}, {-0.5, 0.0}, {0.0, 3.0}, {0.25, -1.0}};
    const auto p = parseval_check(g, 16);
    CHECK(p.angular == doctest::Approx(p.coefficient_sum).epsilon(1e-14));
    CHECK(p.coefficient_sum == doctest::Approx(1 + 4 + 0.25 + 9 + 0.0625 + 1).epsilon(1e-15));
}

TEST_CASE("radial density equals rho times the angular mean of the integrand") {
    for (int n : {2, 3, 5}) {
        const auto pts = oracle::polygon(n, 1.0);
        for (double rho : {0.2, 0.6, 0.95, 1.05, 1.7, 4.0}) {
            auto f = [&](double t) { return oracle::integrand(std::polar(rho, t), pts); };
            const double mean = boost::math::quadrature::trapezoidal(f, 0.0, 2.0 * oracle::pi, 1e-13, 24) /
                                (2.0 * oracle::pi);
            const Region region = rho < 1.0 ? Region::Inner : Region::Outer;
            const double d = radial_density(n, rho, region, 1e-14);
            CHECK(std::abs(d - rho * mean) <= 1e-9 * (1.0 + std::abs(d)));
            CHECK(RadialDensity(n, region, 1e-14).closed(rho) == doctest::Approx(d).epsilon(1e-10));
        }
    }
}

TEST_CASE("truncation tail bounds dominate the true remainder") {
    const RadialDensity inner(4, Region::Inner, 1e-12);
    for (int k : {2, 5, 10}) {
        const auto t = inner.truncated(0.8, k);
        CHECK(std::abs(t.value - inner.closed(0.8)) <= t.tail_bound * (1.0 + 1e-12) + 1e-13);
    }
    CHECK_THROWS_AS(inner.evaluate(1.2), Error);
    CHECK_THROWS_AS(RadialDensity(4, Region::Outer, 1e-12).evaluate(0.5), Error);
    CHECK_THROWS_AS(RadialDensity(1, Region::Outer, 1e-12), Error);
}

TEST_CASE("antiderivatives integrate the closed density") {
    for (int n : {2, 6}) {
        const RadialDensity inner(n, Region::Inner, 1e-14);
        const RadialDensity outer(n, Region::Outer, 1e-14);
        using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
        const double a = GK::integrate([&](double r) { return inner.closed(r); }, 0.3, 0.9, 15, 1e-14);
        CHECK(inner.antiderivative(0.9) - inner.antiderivative(0.3) == doctest::Approx(a).epsilon(1e-11));
        const double b = GK::integrate([&](double r) { return outer.closed(r); }, 1.2, 3.0, 15, 1e-14);
        CHECK(outer.antiderivative(1.2) - outer.antiderivative(3.0) == doctest::Approx(b).epsilon(1e-11));
    }
}

TEST_CASE("I by series and by the closed bracket") {
    for (int n : {2, 4, 7}) {
        const auto s = I_by_series(n, 1e-8);
        const double ref = oracle::half_value(n);
        CHECK(std::abs(s.value - ref) <= 1e-6 * ref);
        CHECK(s.extrapolation_table.size() == 3);
        const auto f = I_by_f_bracket(n);
        CHECK(std::abs(f.value - ref) <= 1e-6 * ref);
        CHECK(std::abs(f.value - s.value) <= 1e-8 * ref);
    }
    CHECK(I_by_series(2, 1e-8).value == doctest::Approx(2.0 * oracle::pi).epsilon(1e-6));
    CHECK(I_by_series(4, 1e-8).value == doctest::Approx(20.0 * oracle::pi).epsilon(1e-6));
    CHECK_THROWS_AS(I_by_series(3, 1e-13), Error);
}
