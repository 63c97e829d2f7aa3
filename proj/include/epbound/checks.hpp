#pragma once

#include <string>
#include <vector>

namespace epb {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct CheckOptions {
    /// Test-harness hook: perturb one internal expected value so the suite
    /// must fail. Verifies the checks can actually falsify.
    bool perturb = false;
    unsigned seed = 20240613;
};

/// Cross-validation suite: every closed form in the library against its
/// independent oracle. Deterministic for a fixed seed.
std::vector<CheckResult> run_all_checks(const CheckOptions& options = {});

bool all_passed(const std::vector<CheckResult>& results);

/// Least-squares slope of log(y) against log(x); used for the
/// expansion-order regressions.
double log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace epb
