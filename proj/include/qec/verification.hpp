#pragma once

#include <string>
#include <vector>

namespace qec {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Runs the full verification suite: closed-form vs enumeration oracle
/// equivalence on the parameter grid, polynomial pins at mu = 0, threshold
/// values, the set-difference identity, five-qubit asymmetry invariance,
/// the dense Knill-Laflamme checks, golden syndrome tables, structural
/// counts, and ordering properties. One result per sub-check.
std::vector<CheckResult> run_acceptance_checks();

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace qec
