#pragma once

// Verification reports: named checks of a computed value against an expected
// one, with JSON / CSV / text emitters, and the identity suite that fills them.

#include "glcorr/algebra.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace glcorr {

enum class CheckMode { Absolute, Relative, Either };

const char* to_string(CheckMode mode) noexcept;
CheckMode check_mode_from_string(const std::string& s);

struct CheckEntry {
    std::string name;
    std::string params;  // e.g. "N=4"
    std::string anchor;  // the identity being checked, in words
    double expected = 0.0;
    double computed = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;  // abs_err / |expected|, or abs_err when expected = 0
    double tol = 0.0;
    CheckMode mode = CheckMode::Absolute;
    bool pass = false;
    std::optional<std::string> pi_multiple;  // q when expected = q * pi, as "p/q"
    std::string status;                      // empty, or "documented-discrepancy"
    std::optional<double> stated_value;      // the value as printed in the source, for errata

    bool operator==(const CheckEntry&) const = default;
};

/// Fills the residuals and the pass flag.
CheckEntry make_check(std::string name, std::string params, std::string anchor, double expected,
                      double computed, double tol, CheckMode mode);
CheckEntry make_check(std::string name, std::string params, std::string anchor,
                      const PiMultiple& expected, double computed, double tol, CheckMode mode);

struct ReportSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int documented_discrepancies = 0;

    bool operator==(const ReportSummary&) const = default;
};

class VerificationReport {
public:
    void add(CheckEntry entry);
    void append(const VerificationReport& other);

    const std::vector<CheckEntry>& entries() const { return entries_; }
    ReportSummary summary() const;
    bool all_pass() const;
    const CheckEntry* find(const std::string& name, const std::string& params) const;

    bool operator==(const VerificationReport&) const = default;

private:
    std::vector<CheckEntry> entries_;
};

/// 17 significant digits; "null" for non-finite values.
std::string format_real(double v);

/// Reals with 17 significant digits.
std::string to_json_text(const VerificationReport& report);
std::string to_csv(const VerificationReport& report);
std::string to_text(const VerificationReport& report);

/// Inverse of to_json_text. Throws InvalidSpec on a malformed document.
VerificationReport report_from_json(const nlohmann::json& doc);

/// Closed-form identities, series, residue and integrand checks for
/// N = 2..max_n, plus the N-independent ones. Each check uses
/// max(tol, its own accuracy floor). Throws Domain unless 2 <= max_n <= 16.
VerificationReport run_identity_suite(int max_n, double tol);

/// Quadrature-oracle checks for N = 2..min(max_n, 5): A_0 by principal
/// value, route equivalence with the regularized integral, the two halves of
/// the annulus split, and m^4 scaling.
VerificationReport run_quadrature_suite(int max_n);

/// Landscape checks: minimizer scaling, optimizer agreement, and the
/// vanishing second-order term.
VerificationReport run_landscape_suite();

}  // namespace glcorr
