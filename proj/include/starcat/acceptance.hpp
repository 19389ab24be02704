#pragma once

#include <string>
#include <vector>

namespace starcat::acceptance {

struct CriterionResult {
    std::string id;
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    double budget_seconds = 0.0;  // 0: untimed
    std::string details;
};

struct Options {
    int n_max = 12;        // cap for the per-n families (never raised above the built-in ranges)
    int search_n_max = 7;  // cap for the multistart coverage runs
    bool extended = false; // adds the n = 9 ELK block and the large ideal-slice checks
};

std::vector<CriterionResult> run_all(const Options& opts);

bool all_passed(const std::vector<CriterionResult>& results);

std::string format_line(const CriterionResult& r);

}  // namespace starcat::acceptance
