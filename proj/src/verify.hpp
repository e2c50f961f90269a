#pragma once

#include <string>
#include <vector>

namespace probelab {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail; // human-readable summary or first failure
};

std::vector<std::string> suite_names();

/// Runs one verification suite by name:
///   moments      - closed-form fourth central moment vs exact enumeration
///                  of every degree-3 polynomial over small prime fields
///   lemma2       - linear-probing total steps vs the interval-intersection
///                  lower bound on randomized instances
///   pairwise     - exhaustive pairwise-independence check of the patched
///                  two-parameter family at p=5, r=3
///   differential - table-vs-reference replay for every scheme
SuiteResult run_suite(const std::string& name);

} // namespace probelab
