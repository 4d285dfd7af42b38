#ifndef SNFY_SELFTEST_HPP
#define SNFY_SELFTEST_HPP

#include <string>
#include <vector>

namespace snfy {

struct SelftestOptions {
    int threads = 1;
    long long minor_budget = 10'000'000;
};

struct CriterionResult {
    std::string name;
    bool pass = false;
    double seconds = 0.0;
    std::string detail;
};

/// The acceptance criteria, in reporting order.
std::vector<std::string> criterion_names();

/// Runs one criterion by name; unknown names come back as failures.
CriterionResult run_criterion(const std::string& name, const SelftestOptions& opts);

std::vector<CriterionResult> run_all_criteria(const SelftestOptions& opts);

}  // namespace snfy

#endif
