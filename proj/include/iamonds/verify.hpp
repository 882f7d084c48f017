// Reproduction suite: every check the repository claims, one result per
// criterion. Shared by the CLI verify-paper subcommand and the acceptance
// test binary.

#pragma once

#include <string>
#include <vector>

namespace iamonds {

struct CriterionResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyOptions {
    int k_max = 50;        // spiral certification range
    int enum_cap = 12;     // identity/bound suite enumeration range
    int jobs = 0;          // 0 = all available
};

std::vector<CriterionResult> run_verification(const VerifyOptions& opts = {});

}  // namespace iamonds
