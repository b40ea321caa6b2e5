#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

namespace chromsym {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    double seconds = 0;
    double limit_seconds = 0;
    std::string detail;
    bool gating = true;
};

struct AcceptanceOptions {
    // Empty runs every criterion.
    std::set<int> only;
    // Adds non-gating checks beyond the pinned desk-scale ranges.
    bool extended = false;
};

/// Runs the reproduction suite. on_result is called as each criterion finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options = {},
                                            const std::function<void(const CriterionResult&)>& on_result = {});

/// One line per criterion: "PASS  3  name  (0.01 s / 10 s)  detail".
std::string format_result(const CriterionResult& r);

}  // namespace chromsym
