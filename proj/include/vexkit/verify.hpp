#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vexkit {

// Outcome of one exhaustive sweep.  `info` lines are supplementary stats,
// `counterexamples` holds the earliest failures in enumeration order (the
// sweep is striped across workers but reports are reproducible for every
// worker count).
struct SuiteResult {
  std::string name;
  int n = 0;
  bool pass = false;
  std::uint64_t checked = 0;
  std::string detail;
  std::vector<std::string> info;
  std::vector<std::string> counterexamples;
};

// The five verdict procedures agree on every element of rank n.
SuiteResult verify_equivalence(int n, int jobs = 1);

// The vexillary count equals the closed-form count; for n <= 5 the
// even-embedding [4 3 2 1]-avoiders are counted too.
SuiteResult verify_counting(int n, int jobs = 1);

// Diagram bijection round trips, duality, and the removal/insertion
// correspondence for one-step length changes on both sides.
SuiteResult verify_lyd(int n, int jobs = 1);

// Search-window stability for every pivot, uniqueness of the vexillary
// transition with the label-decrement law, the single-term expansion
// collapse, and coefficient positivity (positivity capped at rank 3).
SuiteResult verify_transitions(int n, int jobs = 1);

// Box counts equal lengths, the two rank formulas agree, essential sets are
// mirror-symmetric for the block embedding, and (for n <= 4) each element
// is the unique order-minimum of its rank conditions, none redundant.
SuiteResult verify_diagrams(int n, int jobs = 1);

const std::vector<std::string>& suite_names();

// Runs one named suite, or all of them in order for "all".
std::vector<SuiteResult> run_suites(const std::string& suite, int n,
                                    int jobs = 1);

}  // namespace vexkit
