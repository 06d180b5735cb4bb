#pragma once

// The oracle suite behind `magsteklov verify`: closed forms against the
// series oracle, residual audits, Galerkin convergence, Laguerre identities
// and the harmonic-extension audit.

#include <optional>
#include <string>
#include <vector>

namespace magsteklov {

struct CheckResult {
    std::string name;
    bool pass = false;
    double max_error = 0.0;
    double tolerance = 0.0;
    std::vector<std::string> details;
};

struct VerifyOptions {
    std::optional<double> tolerance;  // replaces every per-check tolerance
    std::optional<std::string> only;  // run a single named check
    std::optional<int> n;             // harmonic-extension dimension (1 or 2); both when empty
};

/// Names accepted by VerifyOptions::only, in run order.
std::vector<std::string> verification_check_names();

/// Throws ConfigurationError for an unknown check name or a bad option.
std::vector<CheckResult> run_verification(const VerifyOptions& options = {});

}  // namespace magsteklov
