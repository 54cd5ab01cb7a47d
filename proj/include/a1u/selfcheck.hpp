#pragma once

// Cross-validation suites over the whole library: each compares one route
// (closed formula, classifier, atlas table) against an independent one
// (matrix oracle, exhaustive enumeration, hand-typed expectations).

#include <functional>
#include <string>
#include <vector>

namespace a1u {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  // First failures, or a short summary of what was covered.
  std::string detail;
};

struct SelfcheckSuite {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

// Suites 1-9, in id order. Suite 10 (CLI determinism) needs the executable
// and lives with the acceptance harness.
const std::vector<SelfcheckSuite>& selfcheck_suites();

// Runs every suite, in parallel when `parallel`; results come back in id order.
std::vector<CriterionResult> run_selfcheck(bool parallel = true);

}  // namespace a1u
