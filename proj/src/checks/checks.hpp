#pragma once

// The full verification battery behind `qslit selftest` and the
// acceptance suite: one entry per gate criterion, each self-contained
// with its pinned scenarios and tolerances.

#include <string>
#include <vector>

namespace qslit::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs criteria 1 through 9 in order. Never throws; a criterion that
/// raises is reported as failed with the exception text.
std::vector<CheckResult> run_all();

/// True when every entry passed.
bool all_passed(const std::vector<CheckResult>& results);

} // namespace qslit::checks
