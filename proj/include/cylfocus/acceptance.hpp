#pragma once

#include <string>
#include <vector>

namespace cylfocus {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
};

/// Runs every acceptance criterion on the reference geometry
/// (lambda = 0.05 m, R = 20 lambda, d = lambda/2, N = 251).
/// Output is independent of `threads`.
std::vector<CriterionResult> run_acceptance(unsigned threads);

/// One `[PASS]`/`[FAIL]` line per criterion and a summary line.
std::string format_acceptance(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace cylfocus
