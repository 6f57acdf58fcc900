#include "glcorr/algebra.hpp"
#include "glcorr/errors.hpp"
#include "glcorr/report.hpp"

#include <doctest.h>

using namespace glcorr;

TEST_CASE("make_check modes") {
    const auto abs = make_check("x", "", "", 1.0, 1.0 + 1e-9, 1e-8, CheckMode::Absolute);
    CHECK(abs.pass);
    CHECK(abs.abs_err == doctest::Approx(1e-9));
    const auto rel = make_check("x", "", "", 1e6, 1e6 + 1.0, 1e-8, CheckMode::Relative);
    CHECK_FALSE(rel.pass);
    const auto either = make_check("x", "", "", 1e6, 1e6 + 1e-3, 1e-8, CheckMode::Either);
    CHECK(either.pass);
    const auto pi = make_check("x", "", "", PiMultiple{Rational(8, 3)}, PiMultiple{Rational(8, 3)}.value(), 0.0,
                               CheckMode::Absolute);
    CHECK(pi.pass);
    CHECK(pi.pi_multiple == std::string("8/3"));
    CHECK(check_mode_from_string(to_string(CheckMode::Either)) == CheckMode::Either);
    CHECK_THROWS_AS(check_mode_from_string("loose"), Error);
}

TEST_CASE("format_real keeps 17 digits") {
    CHECK(std::stod(format_real(0.1)) == 0.1);
    CHECK(format_real(NAN) == "null");
}

TEST_CASE("JSON round trip and malformed input") {
    VerificationReport r = run_landscape_suite();
    auto bad = make_check("power", "N=3", "erratum", 3.0, 3.0, 0.0, CheckMode::Absolute);
    bad.status = "documented-discrepancy";
    bad.stated_value = 0.0;
    r.add(bad);
    const auto back = report_from_json(nlohmann::json::parse(to_json_text(r)));
    CHECK(back == r);
    CHECK(to_json_text(back) == to_json_text(r));
    CHECK(back.summary().documented_discrepancies == 1);
    CHECK(back.find("power", "N=3") != nullptr);
    CHECK(back.find("power", "N=4") == nullptr);
    CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"checks": 3})")), Error);
}

TEST_CASE("identity suite passes and is deterministic") {
    const auto a = run_identity_suite(5, 1e-8);
    CHECK(a.all_pass());
    const auto s = a.summary();
    CHECK(s.total == s.passed + s.failed);
    CHECK(s.failed == 0);
    CHECK(to_json_text(run_identity_suite(5, 1e-8)) == to_json_text(a));
    CHECK(to_csv(a).find("name") != std::string::npos);
    CHECK_THROWS_AS(run_identity_suite(17, 1e-8), Error);
}
