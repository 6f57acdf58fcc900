#include "glcorr/errors.hpp"
#include "glcorr/numerics.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

using namespace glcorr;

TEST_CASE("pairwise_sum matches exact integer sums") {
    std::vector<double> v;
    for (int i = 1; i <= 1000; ++i) v.push_back(i);
    CHECK(pairwise_sum(v) == 500500.0);
    CHECK(pairwise_sum(std::vector<double>{}) == 0.0);
}

TEST_CASE("integrate_adaptive on smooth and endpoint-singular integrands") {
    const auto e = integrate_adaptive([](double x) { return std::exp(x); }, 0.0, 1.0, 1e-14, 1e-14);
    CHECK(e.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
    // Integrable 1/sqrt singularity at 0; the endpoint is never sampled.
    const auto s = integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-10, 1e-10);
    CHECK(std::abs(s.value - 2.0) < 1e-8);
    CHECK(s.evaluations > 21);
}

TEST_CASE("integrate_adaptive reports non-finite samples and exhausted budgets") {
    CHECK_THROWS_AS(integrate_adaptive([](double) { return NAN; }, 0.0, 1.0, 1e-8, 1e-8), Error);
    try {
        integrate_adaptive([](double x) { return std::sin(1.0 / x) / x; }, 0.0, 1.0, 1e-14, 1e-14, 5);
        FAIL("expected non-convergence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonConvergence);
    }
}

TEST_CASE("periodic means are exact for trigonometric polynomials") {
    const double m = periodic_mean([](double t) { return 3.0 + std::cos(5 * t) + std::sin(t); }, 16);
    CHECK(m == doctest::Approx(3.0).epsilon(1e-15));
    const auto a = adaptive_periodic_mean([](double t) { return 1.0 / (2.0 + std::cos(t)); }, 8, 1e-14, 1e-14);
    CHECK(a.value == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("richardson removes polynomial error terms for any step ratio") {
    const std::vector<double> h{0.3, 0.2, 0.07};
    std::vector<double> v;
    for (double s : h) v.push_back(1.0 + 2.0 * s - 5.0 * s * s);
    const std::vector<double> p{1.0, 2.0};
    const auto r = richardson(h, v, p);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-13));
    CHECK_THROWS_AS(richardson(std::vector<double>{0.1, 0.2}, std::vector<double>{1, 2}, p), Error);
}

TEST_CASE("fitted_exponent recovers the leading power") {
    const std::vector<double> h{0.1, 0.05, 0.025};
    std::vector<double> v;
    for (double s : h) v.push_back(4.0 + 3.0 * s * s);
    CHECK(fitted_exponent(h, v) == doctest::Approx(2.0).epsilon(1e-10));
    const std::vector<double> flat{1.0, 1.0, 1.0};
    CHECK(std::isnan(fitted_exponent(h, flat)));
}

TEST_CASE("extrapolate_limit rejects tables that do not settle") {
    const std::vector<double> eps{0.1, 0.05, 0.025};
    const std::vector<double> good{1.1, 1.05, 1.025};
    const auto r = extrapolate_limit(eps, good, 0.0, 3);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
    CHECK(r.extrapolation_table.size() == 3);
    const std::vector<double> wild{1.0, 3.0, 0.5};
    try {
        extrapolate_limit(eps, wild, 0.0, 3);
        FAIL("expected non-convergence");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonConvergence);
        CHECK(e.diagnostics() == wild);
    }
}

TEST_CASE("parallel_map keeps results in index order for every thread count") {
    for (int t : {1, 3, 8}) {
        set_thread_count(t);
        const auto out = parallel_map<int>(100, [](std::size_t i) { return static_cast<int>(i * i); });
        for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
    }
    set_thread_count(0);
}
