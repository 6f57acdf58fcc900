#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace glcorr {

enum class ErrorKind {
    InvalidOrder,
    Pole,
    Domain,
    DegenerateConfiguration,
    Conditioning,
    UnsupportedOrder,
    NonConvergence,
    InvalidSpec,
    Evaluation,
    TruncationFailure,
    NoInteriorMinimum,
};

const char* to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` tells callers which
/// contract was violated. Non-convergence errors carry the sequence of
/// partial values that failed to settle.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what, std::vector<double> diagnostics = {})
        : std::runtime_error(std::string(to_string(kind)) + ": " + what),
          kind_(kind),
          diagnostics_(std::move(diagnostics)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::vector<double>& diagnostics() const noexcept { return diagnostics_; }

private:
    ErrorKind kind_;
    std::vector<double> diagnostics_;
};

inline const char* to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidOrder: return "invalid-order";
        case ErrorKind::Pole: return "pole";
        case ErrorKind::Domain: return "domain";
        case ErrorKind::DegenerateConfiguration: return "degenerate-configuration";
        case ErrorKind::Conditioning: return "conditioning";
        case ErrorKind::UnsupportedOrder: return "unsupported-order";
        case ErrorKind::NonConvergence: return "non-convergence";
        case ErrorKind::InvalidSpec: return "invalid-spec";
        case ErrorKind::Evaluation: return "evaluation";
        case ErrorKind::TruncationFailure: return "truncation-failure";
        case ErrorKind::NoInteriorMinimum: return "no-interior-minimum";
    }
    return "unknown";
}

}  // namespace glcorr
