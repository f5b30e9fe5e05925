#pragma once
// the acceptance suite: one group of checks per criterion, shared by the acceptance binary and `report`

#include "klrwb/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace klrwb {

struct CheckResult {
    int criterion = 0;
    std::string label;
    bool pass = false;
    std::string detail;
};

struct CriterionSummary {
    int criterion = 0;
    std::string group;  // filter key for --only
    std::string title;
    bool ran = false;
    bool pass = false;
    bool known_unattainable = false;  // the failing sub-checks are analysed in the README
};

struct AcceptanceOptions {
    Q lam = 1;                    // the generic nonzero lambda
    std::string only;             // comma separated groups or c<k>; empty runs everything
    std::uint64_t seed = 20240611;
};

struct AcceptanceRun {
    Q lam;
    std::vector<CheckResult> checks;
    std::vector<CriterionSummary> criteria;
    bool all_pass() const;
    // every failing criterion is a known unattainable one and vice versa
    bool only_known_failures() const;
};

std::vector<CriterionSummary> acceptance_criteria();
AcceptanceRun run_acceptance(const AcceptanceOptions& opts);
std::string acceptance_markdown(const AcceptanceRun& run);
std::string acceptance_csv(const AcceptanceRun& run);

}  // namespace klrwb
