// Acceptance gate: one PASS/FAIL line per criterion.
//
//   a1u_acceptance            run every criterion
//   a1u_acceptance N [M ...]  run only the listed criteria
//
// Criteria 1-9 are the library cross-validation suites; 10 runs a fixed batch
// of CLI commands twice and compares the JSON byte for byte. All comparisons
// are exact; there is no numeric tolerance anywhere.

#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "a1u/selfcheck.hpp"
#include "cli_runner.hpp"

namespace {

// Every subcommand, including the full self-check.
const std::vector<std::string> kBatch = {
    "tensor -p 7 2,5",
    "tensor -p 13 12,13 --oracle",
    "tensor -p 5 2,3,4",
    "module -p 7 --verify 'L(1)*L(5)@1+2*L(3)+W(9)+T(8)+2*triv'",
    "classify classical --family C --dim 10 --p 7 --partition 6,1,1,1,1",
    "classify classical --family B --dim 9 --p 5 --partition 3,3,1,1,1",
    "classify classical --family A --dim 6 --p 5 --partition 5,1",
    "classify exceptional --group E7 --p 7 --label A6",
    "classify exceptional --group E8 --p 11",
    "classify exceptional --group G2 --p 5 --label ~A1",
    "enumerate --form orthogonal --p 5 --dim 8 --partition 5,3 --max-twist 3",
    "enumerate --form symplectic --p 7 --dim 12 --partition 3,3,1,1,1,1",
    "enumerate --form orthogonal --p 7 --dim 14 --partition 7,3,3,1 --pairwise-distinct",
    "witnesses --family C --dim 12 --p 5 --partition 5,5,1,1",
    "selfcheck",
};

a1u::CriterionResult determinism() {
  a1u::CriterionResult r{10, "CLI JSON is byte-identical across runs", true, ""};
  int runs = 0;
  for (const auto& args : kBatch) {
    const auto a = a1u::test::run_cli("--json " + args);
    const auto b = a1u::test::run_cli("--json " + args);
    runs += 2;
    if (a.out.empty() || a.out != b.out || a.code != b.code) {
      r.passed = false;
      r.detail += (r.detail.empty() ? "" : "; ") + args;
    }
  }
  if (r.passed) r.detail = std::to_string(kBatch.size()) + " commands, " +
                           std::to_string(runs) + " runs";
  else r.detail = "differs: " + r.detail;
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> wanted;
  for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
  const auto selected = [&](int id) { return wanted.empty() || wanted.count(id) > 0; };

  std::vector<a1u::CriterionResult> results;
  for (const auto& suite : a1u::selfcheck_suites()) {
    if (!selected(suite.id)) continue;
    try {
      results.push_back(suite.run());
    } catch (const std::exception& e) {
      results.push_back({suite.id, suite.name, false, std::string("exception: ") + e.what()});
    }
  }
  if (selected(10)) results.push_back(determinism());

  bool all = true;
  for (const auto& r : results) {
    std::cout << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.name
              << "  [" << r.detail << "]\n";
    all = all && r.passed;
  }
  return all ? 0 : 1;
}
