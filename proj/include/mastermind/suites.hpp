// suites.hpp -- the acceptance property suites behind `mm verify`

#pragma once

#include <string>
#include <vector>

namespace mastermind::suites {

struct CheckResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Runs one numbered acceptance check (1..9).
CheckResult run_check(int id);

/// All checks, in order.
std::vector<CheckResult> run_all();

/// Named suite -> subset of checks:
///   oracle-equivalence {1,5,7}, coinweigh {4}, invariants {2,6},
///   nonadaptive {8}, scaling {3,9}.
/// Throws std::invalid_argument for an unknown suite name.
std::vector<CheckResult> run_suite(const std::string& name);

std::vector<std::string> suite_names();

} // namespace mastermind::suites
