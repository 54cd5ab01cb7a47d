#include "a1u/selfcheck.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "a1u/atlas.hpp"
#include "a1u/classical.hpp"
#include "a1u/enumerator.hpp"
#include "a1u/ffmatrix.hpp"
#include "a1u/jordan_type.hpp"
#include "a1u/partition.hpp"
#include "a1u/sl2_module.hpp"

namespace a1u {

namespace {

// Collects failures; only the first few are kept verbatim.
class Failures {
 public:
  void add(const std::string& what) {
    if (count_ < kKept) lines_.push_back(what);
    ++count_;
  }
  bool empty() const { return count_ == 0; }

  CriterionResult finish(int id, std::string name, const std::string& summary) const {
    CriterionResult r{id, std::move(name), count_ == 0, summary};
    if (count_ > 0) {
      std::ostringstream out;
      out << count_ << " failure(s)";
      for (const auto& l : lines_) out << "; " << l;
      if (count_ > kKept) out << "; ...";
      r.detail = out.str();
    }
    return r;
  }

 private:
  static constexpr std::size_t kKept = 8;
  std::vector<std::string> lines_;
  std::size_t count_ = 0;
};

JordanType type_of(int p, std::vector<int> blocks) { return JordanType(p, std::move(blocks)); }

std::string pair_name(int m, int n, int p) {
  return "J" + std::to_string(m) + "xJ" + std::to_string(n) + " p=" + std::to_string(p);
}

Matrix unipotent_generator(int p) {
  const std::array<std::int64_t, 4> u = {1, 1, 0, 1};
  return Matrix(PrimeField(p), 2, 2, u);
}

// ---------------------------------------------------------------------------

CriterionResult tensor_oracle_equivalence() {
  Failures f;
  int pairs = 0;
  for (int p : {2, 3, 5, 7, 11, 13}) {
    for (int m = 1; m <= p; ++m) {
      for (int n = m; n <= p; ++n) {
        ++pairs;
        const auto fast = tensor_pair_formula(m, n, p);
        const auto oracle = tensor_pair_oracle(m, n, p);
        if (fast != oracle) {
          f.add(pair_name(m, n, p) + ": formula " + to_string(fast) + " vs oracle " +
                to_string(oracle));
        }
        if (oracle.dimension() != m * n) f.add(pair_name(m, n, p) + ": dimension not conserved");
        if (tensor_pair_oracle(n, m, p) != oracle) f.add(pair_name(m, n, p) + ": not symmetric");
      }
    }
  }
  return f.finish(1, "tensor formula equals GF(p) oracle",
                  std::to_string(pairs) + " pairs, p in {2,3,5,7,11,13}");
}

CriterionResult twofold_trichotomy() {
  Failures f;
  int pairs = 0;
  for (int p : {3, 5, 7, 11, 13}) {
    if (tensor_pair(2, 2, p, TensorMethod::Oracle) != type_of(p, {3, 1})) {
      f.add(pair_name(2, 2, p) + " is not (3,1)");
    }
    if (tensor_pair(2, p, p, TensorMethod::Oracle) != type_of(p, {p, p})) {
      f.add(pair_name(2, p, p) + " is not (p,p)");
    }
    for (int m = 2; m <= p; ++m) {
      for (int n = m; n <= p; ++n) {
        if (m == 2 && (n == 2 || n == p)) continue;
        ++pairs;
        const auto t = tensor_pair(m, n, p, TensorMethod::Oracle);
        const auto prof = summand_profile(t);
        const bool three = prof.nontrivial_count >= 3;
        const bool two_distinct = prof.nontrivial_count == 2 && prof.distinct_nontrivial.size() == 2;
        if (!three && !two_distinct) f.add(pair_name(m, n, p) + " = " + to_string(t));
      }
    }
  }
  return f.finish(2, "two-fold tensor trichotomy",
                  std::to_string(pairs) + " pairs plus the two special cases");
}

void nondecreasing_tuples(int t, int lo, int hi, std::vector<int>& cur,
                          std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == t) {
    out.push_back(cur);
    return;
  }
  for (int v = lo; v <= hi; ++v) {
    cur.push_back(v);
    nondecreasing_tuples(t, v, hi, cur, out);
    cur.pop_back();
  }
}

CriterionResult threefold_three_summands() {
  Failures f;
  int tuples = 0;
  for (int p : {3, 5, 7}) {
    for (int t : {3, 4}) {
      std::vector<std::vector<int>> all;
      std::vector<int> cur;
      nondecreasing_tuples(t, 2, p, cur, all);
      for (const auto& sizes : all) {
        ++tuples;
        const auto type = tensor_multi(sizes, p, TensorMethod::Oracle);
        if (summand_profile(type).nontrivial_count < 3) {
          std::string name;
          for (int s : sizes) name += "J" + std::to_string(s);
          f.add(name + " p=" + std::to_string(p) + " = " + to_string(type));
        }
      }
    }
  }
  const std::array<int, 3> j2 = {2, 2, 2};
  const std::map<int, std::vector<int>> expected = {
      {2, {2, 2, 2, 2}}, {3, {3, 3, 2}}, {5, {4, 2, 2}}, {7, {4, 2, 2}}};
  for (const auto& [p, blocks] : expected) {
    const auto got = tensor_multi(j2, p, TensorMethod::Oracle);
    if (got != type_of(p, blocks)) {
      f.add("J2^3 p=" + std::to_string(p) + " = " + to_string(got));
    }
  }
  return f.finish(3, "multi-fold tensors have three nontrivial summands",
                  std::to_string(tuples) + " tuples plus J2^3 at p = 2,3,5,7");
}

CriterionResult module_facts() {
  Failures f;
  int checks = 0;
  for (int p : {5, 7}) {
    const auto u = unipotent_generator(p);
    for (int c = 0; c <= 2 * p - 2; ++c) {
      ++checks;
      const auto blocks = jordan_blocks_of_unipotent(sym_power(u, static_cast<std::size_t>(c)));
      const auto expected =
          c <= p - 1 ? type_of(p, {c + 1}) : type_of(p, {p, c - p + 1});
      if (type_of(p, blocks) != expected) {
        f.add("Sym^" + std::to_string(c) + " p=" + std::to_string(p) + " = " +
              to_string(type_of(p, blocks)));
      }
      if (c >= p) {
        const ModuleDescriptor weyl(p, {WeylSummand{c}});
        if (jordan_type(weyl) != expected) f.add("jordan_type(W(" + std::to_string(c) + "))");
        if (jordan_type_of_unipotent(realize(weyl)) != expected) {
          f.add("realize(W(" + std::to_string(c) + "))");
        }
        const ModuleDescriptor tilting(p, {TiltingSummand{c}});
        if (jordan_type(tilting) != type_of(p, {p, p})) {
          f.add("jordan_type(T(" + std::to_string(c) + ")) p=" + std::to_string(p));
        }
      }
    }
    for (int c = 1; c <= p - 1; ++c) {
      const ModuleDescriptor irr(p, {IrrSummand{IrreducibleDescriptor({{c, 0}})}});
      if (jordan_type_of_unipotent(realize(irr)) != type_of(p, {c + 1})) {
        f.add("realize(L(" + std::to_string(c) + ")) p=" + std::to_string(p));
      }
    }
  }
  return f.finish(4, "symmetric power, Weyl and tilting Jordan types",
                  std::to_string(checks) + " weights over p in {5,7}");
}

CriterionResult orthogonal_menu() {
  // (module, dimension, blocks); the trivial row is added to the menu output.
  using Row = std::tuple<std::string, int, std::vector<int>>;
  const std::vector<Row> both = {
      {"L(0)", 1, {1}},          {"L(2)", 3, {3}},
      {"L(1)*L(1)@1", 4, {3, 1}}, {"L(4)", 5, {5}},
      {"L(1)*L(3)@1", 8, {5, 3}}, {"L(2)*L(2)@1", 9, {5, 3, 1}},
      {"L(1)*L(1)@1*L(2)@2", 12, {5, 3, 3, 1}}};
  const std::vector<Row> p7_only = {{"L(6)", 7, {7}}, {"L(1)*L(5)@1", 12, {7, 5}}};

  Failures f;
  for (int p : {5, 7}) {
    std::set<Row> expected(both.begin(), both.end());
    if (p == 7) expected.insert(p7_only.begin(), p7_only.end());
    std::set<Row> got = {{"L(0)", 1, {1}}};
    for (const auto& e : jordan_menu(FormType::Orthogonal, p, 14)) {
      got.insert({to_string(e.module), e.module.dimension(), e.type.blocks()});
    }
    for (const auto& r : expected) {
      if (!got.count(r)) f.add("p=" + std::to_string(p) + " missing " + std::get<0>(r));
    }
    for (const auto& r : got) {
      if (!expected.count(r)) f.add("p=" + std::to_string(p) + " extra " + std::get<0>(r));
    }
  }
  return f.finish(5, "orthogonal irreducibles of dimension <= 14", "7 rows at p=5, 9 at p=7");
}

CriterionResult restricted_orthogonal_sums() {
  using Lists = std::map<std::pair<int, int>, std::set<std::vector<int>>>;
  const Lists expected = {
      {{4, 5}, {{5, 3}, {3, 3, 1, 1}}},
      {{4, 7}, {{7, 1}, {5, 3}, {3, 3, 1, 1}}},
      {{5, 5}, {{5, 5}, {5, 3, 1, 1}, {3, 3, 3, 1}}},
      {{5, 7}, {{7, 3}, {5, 5}, {5, 3, 1, 1}, {3, 3, 3, 1}}},
      {{6, 5}, {{5, 3, 3, 1}, {3, 3, 3, 1, 1, 1}, {3, 3, 3, 3}}},
      {{6, 7}, {{7, 5}, {7, 3, 1, 1}, {5, 3, 3, 1}, {3, 3, 3, 1, 1, 1}, {3, 3, 3, 3}}},
      {{7, 5}, {{5, 5, 3, 1}, {5, 3, 3, 3}, {5, 3, 3, 1, 1, 1}, {3, 3, 3, 3, 1, 1}}},
      {{7, 7},
       {{7, 7}, {7, 3, 3, 1}, {5, 5, 3, 1}, {5, 3, 3, 3}, {5, 3, 3, 1, 1, 1}, {3, 3, 3, 3, 1, 1}}},
  };
  const SummandRestrictions pairwise_distinct{false, 1};
  Failures f;
  for (const auto& [key, want] : expected) {
    const auto [n, p] = key;
    std::set<std::vector<int>> got;
    for (const auto& lambda : partitions_of(2 * n, p)) {
      if (lambda.largest() < 2) continue;
      const auto r = enumerate(FormType::Orthogonal, 2 * n, lambda, p, 3, pairwise_distinct);
      if (r.count > 0) got.insert(lambda.parts());
    }
    if (got != want) {
      std::string diff;
      for (const auto& v : got) {
        if (!want.count(v)) diff += " +(" + to_string(Partition(v)) + ")";
      }
      for (const auto& v : want) {
        if (!got.count(v)) diff += " -(" + to_string(Partition(v)) + ")";
      }
      f.add("D" + std::to_string(n) + " p=" + std::to_string(p) + ":" + diff);
    }
  }
  return f.finish(6, "sums of inequivalent orthogonal irreducibles in D4-D7",
                  "8 (n, p) lists");
}

CriterionResult classifier_matches_enumeration() {
  struct Range {
    Family family;
    int lo;
    int hi;
  };
  const std::array<Range, 3> ranges = {
      Range{Family::SL, 2, 8}, Range{Family::Sp, 4, 12}, Range{Family::SO, 7, 12}};
  Failures f;
  int cases = 0;
  for (int p : {5, 7}) {
    for (const auto& range : ranges) {
      for (int dim = range.lo; dim <= range.hi; ++dim) {
        if (range.family == Family::Sp && dim % 2 != 0) continue;
        const ClassicalGroup g(range.family, dim);
        for (const auto& lambda : partitions_of(dim, p - 1)) {
          if (validate(g, lambda, p)) continue;
          ++cases;
          const auto verdict = unicity_verdict(g, lambda, p);
          const auto r = enumerate(g.form(), dim, lambda, p, 3);
          const bool classifier_unique = verdict.kind == Verdict::Kind::Unique;
          const bool enumerated_unique = r.count == 1 && !r.growth_flag;
          if (classifier_unique != enumerated_unique) {
            f.add(g.name() + " (" + to_string(lambda) + ") p=" + std::to_string(p) + ": " +
                  std::string(to_string(verdict.kind)) + " vs " + std::to_string(r.count) +
                  " class(es)" + (r.growth_flag ? " growing" : ""));
          }
        }
      }
    }
  }
  return f.finish(7, "classifier agrees with exhaustive enumeration",
                  std::to_string(cases) + " (group, partition, p) cases");
}

CriterionResult witness_soundness() {
  Failures f;
  int checked = 0;
  for (int p : {3, 5, 7, 11}) {
    for (Family family : {Family::SL, Family::Sp, Family::SO}) {
      for (int dim = 2; dim <= 14; ++dim) {
        if (family == Family::Sp && dim % 2 != 0) continue;
        if (family == Family::SO && dim < 3) continue;
        const ClassicalGroup g(family, dim);
        for (const auto& lambda : partitions_of(dim, p)) {
          if (validate(g, lambda, p)) continue;
          const auto v = unicity_verdict(g, lambda, p);
          if (v.kind != Verdict::Kind::NonUnique || !v.witnesses) continue;
          ++checked;
          const std::string name =
              g.name() + " (" + to_string(lambda) + ") p=" + std::to_string(p);
          const JordanType want(p, lambda.parts());
          for (const auto* w : {&v.witnesses->first, &v.witnesses->second}) {
            if (dimension(*w) != dim) f.add(name + ": dimension of " + to_string(*w));
            if (jordan_type(*w) != want) f.add(name + ": type of " + to_string(*w));
            if (!admissible_in(*w, g.form())) f.add(name + ": form of " + to_string(*w));
            if (!w->has_tilting() && jordan_type_of_unipotent(realize(*w)) != want) {
              f.add(name + ": realized type of " + to_string(*w));
            }
          }
          if (v.witnesses->first.normalized() == v.witnesses->second.normalized()) {
            f.add(name + ": witnesses coincide");
          }
        }
      }
    }
  }
  return f.finish(8, "witness pairs are sound", std::to_string(checked) + " witness pairs");
}

// Hand-typed copy of the unicity table, independent of the data file.
struct TableRow {
  ExceptionalType group;
  int min_p;
  int max_p;  // inclusive; 0 means unbounded
  std::vector<std::string> labels;
};

CriterionResult atlas_fidelity() {
  using T = ExceptionalType;
  const std::vector<TableRow> table = {
      {T::G2, 5, 0, {"~A1"}},
      {T::F4, 5, 0, {"~A2", "B2", "B3", "C3", "F4(a1)"}},
      {T::E6, 7, 0, {"A5", "D5", "E6(a1)"}},
      {T::E7, 7, 7, {"(A5)''", "(A5)'"}},
      {T::E7, 11, 0, {"(A5)''", "(A5)'", "D5", "A6", "D6", "E6(a1)", "E6", "E7(a1)"}},
      {T::E8, 7, 7, {"A5"}},
      {T::E8, 11, 0,
       {"A5", "D5", "E6(a1)", "D6", "E6", "A7", "D7", "E7(a1)", "E7", "E8(a4)", "E8(a2)",
        "E8(a1)"}},
  };
  const std::vector<std::tuple<T, int, std::vector<std::string>>> negatives = {
      {T::E6, 5, {"A2", "A4", "D4(a1)"}},
      {T::E8, 7, {"A2", "A4", "D4(a1)", "D5(a1)", "A6", "E6(a3)", "D6(a2)", "E7(a5)", "E8(a7)"}},
      {T::E7, 7, {"A2", "A4", "D4(a1)", "D5(a1)", "D6(a2)", "E6(a3)", "E7(a5)", "A6"}},
  };
  const std::map<T, std::set<std::string>> large_p = {
      {T::G2, {"A1", "~A1", "G2"}},
      {T::F4, {"A1", "~A2", "B2", "B3", "C3", "F4(a1)", "F4"}},
      {T::E6, {"A1", "A3", "D4", "A5", "D5", "E6(a1)", "E6"}},
      {T::E7,
       {"A1", "A3", "D4", "(A5)''", "(A5)'", "D5", "A6", "D6", "E6(a1)", "E6", "E7(a1)", "E7"}},
      {T::E8,
       {"A1", "A3", "D4", "A5", "D5", "E6(a1)", "D6", "E6", "A7", "D7", "E7(a1)", "E7", "E8(a4)",
        "E8(a2)", "E8(a1)", "E8"}},
  };
  const std::array<int, 10> primes = {5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const auto& atlas = Atlas::builtin();

  Failures f;
  auto expect = [&](T g, int p, const std::string& label, AtlasVerdict::Kind want) {
    const auto got = atlas.verdict(g, p, label).kind;
    if (got != want) {
      f.add(std::string(to_string(g)) + " p=" + std::to_string(p) + " " + label + ": " +
            std::string(to_string(got)));
    }
  };

  for (const auto& row : table) {
    for (int p : primes) {
      if (!is_good_prime(row.group, p) || p < row.min_p || (row.max_p && p > row.max_p)) continue;
      for (const auto& l : row.labels) expect(row.group, p, l, AtlasVerdict::Kind::Unique);
    }
  }
  for (const auto& [g, labels] : large_p) {
    for (int p : primes) {
      if (!is_good_prime(g, p)) {
        expect(g, p, "A1", AtlasVerdict::Kind::BadPrime);
        continue;
      }
      for (const char* l : {"A1", "A3", "D4"}) {
        if (is_known_label(g, l)) expect(g, p, l, AtlasVerdict::Kind::Unique);
      }
      expect(g, p, std::string(to_string(g)), AtlasVerdict::Kind::Unique);
      expect(g, p, "NotAClass", AtlasVerdict::Kind::UnknownLabel);
    }
  }
  for (const auto& [g, p, labels] : negatives) {
    for (const auto& l : labels) expect(g, p, l, AtlasVerdict::Kind::NonUnique);
  }

  for (const auto& [g, want] : large_p) {
    for (int p : {31, 37}) {
      const auto got = atlas.list_unique(g, p);
      if (std::set<std::string>(got.begin(), got.end()) != want) {
        f.add("list_unique " + std::string(to_string(g)) + " p=" + std::to_string(p));
      }
    }
    std::set<std::string> previous;
    for (int p : primes) {
      if (!is_good_prime(g, p)) continue;
      const auto now = atlas.list_unique(g, p);
      const std::set<std::string> current(now.begin(), now.end());
      if (!std::includes(current.begin(), current.end(), previous.begin(), previous.end())) {
        f.add("nesting " + std::string(to_string(g)) + " at p=" + std::to_string(p));
      }
      previous = current;
    }
  }
  const auto e7_5 = atlas.list_unique(T::E7, 5);
  if (std::set<std::string>(e7_5.begin(), e7_5.end()) !=
      std::set<std::string>{"A1", "A3", "D4", "E7"}) {
    f.add("list_unique E7 p=5");
  }
  return f.finish(9, "exceptional atlas matches the unicity table",
                  std::to_string(atlas.records().size()) + " records, primes 5..37");
}

}  // namespace

const std::vector<SelfcheckSuite>& selfcheck_suites() {
  static const std::vector<SelfcheckSuite> suites = {
      {1, "tensor formula equals GF(p) oracle", tensor_oracle_equivalence},
      {2, "two-fold tensor trichotomy", twofold_trichotomy},
      {3, "multi-fold tensors have three nontrivial summands", threefold_three_summands},
      {4, "symmetric power, Weyl and tilting Jordan types", module_facts},
      {5, "orthogonal irreducibles of dimension <= 14", orthogonal_menu},
      {6, "sums of inequivalent orthogonal irreducibles in D4-D7", restricted_orthogonal_sums},
      {7, "classifier agrees with exhaustive enumeration", classifier_matches_enumeration},
      {8, "witness pairs are sound", witness_soundness},
      {9, "exceptional atlas matches the unicity table", atlas_fidelity},
  };
  return suites;
}

std::vector<CriterionResult> run_selfcheck(bool parallel) {
  const auto& suites = selfcheck_suites();
  auto guarded = [](const SelfcheckSuite& s) {
    try {
      return s.run();
    } catch (const std::exception& e) {
      return CriterionResult{s.id, s.name, false, std::string("exception: ") + e.what()};
    }
  };
  std::vector<CriterionResult> out;
  if (!parallel) {
    for (const auto& s : suites) out.push_back(guarded(s));
    return out;
  }
  std::vector<std::future<CriterionResult>> pending;
  for (const auto& s : suites) pending.push_back(std::async(std::launch::async, guarded, s));
  for (auto& p : pending) out.push_back(p.get());
  return out;
}

}  // namespace a1u
