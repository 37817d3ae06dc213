#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "lpm/inequalities.hpp"

namespace lpm {

const std::vector<std::string>& battery_checks();
bool is_battery_check(const std::string& name);

struct BatteryConfig {
    std::string family = "ek";
    std::string check = "fischer";
    int trials = 100;
    std::uint64_t seed = 0;
    int n_max = 5;
    double tol_rel = 1e-9;
    double epsilon = 0.01;
    bool all_records = false;  // one line per inequality instead of the worst per sample
};

struct BatterySummary {
    int samples = 0;
    int records = 0;
    int violations = 0;
    int preconditions_failed = 0;
    double min_slack = 0;      // raw lhs - rhs (or the check's native slack)
    double min_rel_slack = 0;  // slack / (1 + max(|lhs|, |rhs|))
};

// Streams one JSON object per line, then a summary line. Throws DomainError
// for an unknown family or check.
BatterySummary run_battery(const BatteryConfig& cfg, std::ostream& out);

} // namespace lpm
