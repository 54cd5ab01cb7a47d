#include "a1u/enumerator.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <utility>

namespace a1u {

namespace {

// (summand dimensions, weights, twists) over the summands in display order.
auto class_key(const EmbeddingClass& c) {
  std::vector<int> dims, weights, twists;
  const int p = c.descriptor.p();
  for (const auto& s : c.descriptor.summands()) {
    dims.push_back(dimension(s, p));
    const IrreducibleDescriptor* m = nullptr;
    if (const auto* x = std::get_if<IrrSummand>(&s)) m = &x->module;
    if (const auto* x = std::get_if<DoubledSummand>(&s)) m = &x->module;
    if (m == nullptr) continue;
    for (const auto& f : m->factors()) {
      weights.push_back(f.weight);
      twists.push_back(f.twist);
    }
  }
  return std::make_tuple(dims, weights, twists);
}

int max_twist_of(const ModuleDescriptor& d) {
  int best = 0;
  for (const auto& s : d.summands()) {
    if (const auto* x = std::get_if<IrrSummand>(&s)) best = std::max(best, x->module.max_twist());
    if (const auto* x = std::get_if<DoubledSummand>(&s)) {
      best = std::max(best, x->module.max_twist());
    }
  }
  return best;
}

// Block-size histogram, index = block size.
using Counts = std::vector<int>;

Counts counts_of(const JordanType& t, int p) {
  Counts c(static_cast<std::size_t>(p) + 1, 0);
  for (int b : t.blocks()) ++c[static_cast<std::size_t>(b)];
  return c;
}

bool fits(const Counts& need, const Counts& have) {
  for (std::size_t i = 0; i < need.size(); ++i) {
    if (need[i] > have[i]) return false;
  }
  return true;
}

void subtract(Counts& have, const Counts& need, int times) {
  for (std::size_t i = 0; i < need.size(); ++i) have[i] -= times * need[i];
}

// Ascending weight lists (multisets) with entries in 1..p-1, at most
// max_factors entries and product of (w + 1) at most max_dim.
void weight_multisets(int p, int max_dim, int max_factors, std::vector<int>& current, int min_w,
                      int dim_so_far, std::vector<std::vector<int>>& out) {
  if (!current.empty()) out.push_back(current);
  if (static_cast<int>(current.size()) == max_factors) return;
  for (int w = min_w; w <= p - 1; ++w) {
    if (dim_so_far * (w + 1) > max_dim) break;
    current.push_back(w);
    weight_multisets(p, max_dim, max_factors, current, w, dim_so_far * (w + 1), out);
    current.pop_back();
  }
}

// All irreducibles with this weight multiset and distinct twists in 0..max_twist.
std::vector<IrreducibleDescriptor> twisted_versions(const std::vector<int>& weights,
                                                    int max_twist) {
  std::vector<IrreducibleDescriptor> out;
  const int k = static_cast<int>(weights.size());
  std::vector<int> twists(static_cast<std::size_t>(k));
  auto choose = [&](auto&& self, int index, int next) -> void {
    if (index == k) {
      auto perm = weights;
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<IrreducibleFactor> factors;
        for (int i = 0; i < k; ++i) factors.push_back({perm[i], twists[i]});
        out.emplace_back(std::move(factors));
      } while (std::next_permutation(perm.begin(), perm.end()));
      return;
    }
    for (int t = next; t <= max_twist; ++t) {
      twists[static_cast<std::size_t>(index)] = t;
      self(self, index + 1, t + 1);
    }
  };
  choose(choose, 0, 0);
  return out;
}

struct Candidate {
  Summand summand;
  Counts counts;
  int max_copies;
};

class Search {
 public:
  Search(std::vector<Candidate> candidates, FormType form, const SummandRestrictions& r, int p)
      : candidates_(std::move(candidates)), form_(form), restrictions_(r), p_(p) {}

  std::vector<ModuleDescriptor> run(Counts target) {
    std::vector<Summand> chosen;
    visit(0, target, chosen);
    return std::move(found_);
  }

 private:
  bool visit(std::size_t i, Counts& remaining, std::vector<Summand>& chosen) {
    if (i == candidates_.size()) return accept_leaf(remaining, chosen);
    auto key = std::make_pair(i, remaining);
    if (auto it = dead_.find(key); it != dead_.end()) return false;

    bool any = visit(i + 1, remaining, chosen);
    const auto& c = candidates_[i];
    int copies = 0;
    while (copies < c.max_copies && fits(c.counts, remaining)) {
      subtract(remaining, c.counts, 1);
      chosen.push_back(c.summand);
      ++copies;
      any = visit(i + 1, remaining, chosen) || any;
    }
    subtract(remaining, c.counts, -copies);
    chosen.resize(chosen.size() - static_cast<std::size_t>(copies));

    if (!any) dead_.insert(std::move(key));
    return any;
  }

  bool accept_leaf(const Counts& remaining, const std::vector<Summand>& chosen) {
    for (std::size_t b = 2; b < remaining.size(); ++b) {
      if (remaining[b] != 0) return false;
    }
    const int r = remaining[1];
    if (form_ == FormType::Symplectic && r % 2 != 0) return false;
    if (restrictions_.max_trivial >= 0 && r > restrictions_.max_trivial) return false;
    std::vector<Summand> summands = chosen;
    if (r > 0) summands.emplace_back(TrivialSummand{r});
    found_.emplace_back(p_, std::move(summands));
    return true;
  }

  std::vector<Candidate> candidates_;
  FormType form_;
  SummandRestrictions restrictions_;
  int p_;
  std::set<std::pair<std::size_t, Counts>> dead_;
  std::vector<ModuleDescriptor> found_;
};

}  // namespace

bool class_order_less(const EmbeddingClass& a, const EmbeddingClass& b) {
  return class_key(a) < class_key(b);
}

EmbeddingClass canonicalize(const ModuleDescriptor& d) {
  if (d.has_weyl_or_tilting()) {
    throw Error(ErrorCode::NotCompletelyReducible,
                "Weyl and tilting summands are not completely reducible");
  }
  int shift = -1;
  for (const auto& s : d.summands()) {
    const IrreducibleDescriptor* m = nullptr;
    if (const auto* x = std::get_if<IrrSummand>(&s)) m = &x->module;
    if (const auto* x = std::get_if<DoubledSummand>(&s)) m = &x->module;
    if (m != nullptr && (shift < 0 || m->min_twist() < shift)) shift = m->min_twist();
  }
  if (shift < 0) shift = 0;

  // Copies of each irreducible: Irr counts once, Doubled twice.
  std::map<IrreducibleDescriptor, int> copies;
  int trivial = 0;
  for (const auto& s : d.summands()) {
    if (const auto* x = std::get_if<IrrSummand>(&s)) copies[x->module.shifted(-shift)] += 1;
    if (const auto* x = std::get_if<DoubledSummand>(&s)) copies[x->module.shifted(-shift)] += 2;
    if (const auto* x = std::get_if<TrivialSummand>(&s)) trivial += x->multiplicity;
  }
  std::vector<Summand> out;
  for (const auto& [module, n] : copies) {
    for (int i = 0; i < n / 2; ++i) out.emplace_back(DoubledSummand{module});
    if (n % 2 == 1) out.emplace_back(IrrSummand{module});
  }
  if (trivial > 0) out.emplace_back(TrivialSummand{trivial});
  return EmbeddingClass{ModuleDescriptor(d.p(), std::move(out)).normalized()};
}

EnumerationResult enumerate(FormType form, int dim, const Partition& lambda, int p, int max_twist,
                            const SummandRestrictions& restrictions) {
  auto invalid = [](const std::string& msg) { return Error(ErrorCode::InvalidQuery, msg); };
  if (!is_prime(p)) throw invalid(std::to_string(p) + " is not prime");
  if (lambda.parts().empty() || lambda.total() != dim) {
    throw invalid("partition total does not equal dimension " + std::to_string(dim));
  }
  if (lambda.largest() > p) throw invalid("a part exceeds p = " + std::to_string(p));
  if (max_twist < 1) throw invalid("max_twist must be at least 1");
  if (form != FormType::None && p == 2) throw invalid("forms need an odd prime");

  const JordanType target_type(p, lambda.parts());
  const Counts target = counts_of(target_type, p);

  std::vector<std::vector<int>> shapes;
  std::vector<int> scratch;
  weight_multisets(p, dim, max_twist + 1, scratch, 1, 1, shapes);

  std::vector<Candidate> candidates;
  for (const auto& weights : shapes) {
    auto sizes = weights;
    for (auto& w : sizes) ++w;
    const JordanType type = tensor_multi(sizes, p);
    const Counts once = counts_of(type, p);
    if (!fits(once, target)) continue;
    Counts twice = once;
    for (auto& v : twice) v *= 2;
    for (auto& module : twisted_versions(weights, max_twist)) {
      if (form == FormType::None || intrinsic_form(module) == form) {
        candidates.push_back({IrrSummand{module}, once, 1});
      }
      if (restrictions.allow_doubled && fits(twice, target)) {
        candidates.push_back({DoubledSummand{module}, twice, dim});
      }
    }
  }

  auto raw = Search(std::move(candidates), form, restrictions, p).run(target);

  EnumerationResult result;
  result.max_twist = max_twist;
  for (const auto& d : raw) result.classes.push_back(canonicalize(d));
  std::sort(result.classes.begin(), result.classes.end(), class_order_less);
  result.classes.erase(std::unique(result.classes.begin(), result.classes.end()),
                       result.classes.end());
  result.count = result.classes.size();
  const auto below = std::count_if(result.classes.begin(), result.classes.end(), [&](const auto& c) {
    return max_twist_of(c.descriptor) <= max_twist - 1;
  });
  result.growth_flag = static_cast<std::size_t>(below) < result.count;
  return result;
}

std::vector<MenuEntry> jordan_menu(FormType form, int p, int max_dim) {
  static_cast<void>(PrimeField{p});
  std::vector<std::vector<int>> shapes;
  std::vector<int> scratch;
  weight_multisets(p, max_dim, max_dim, scratch, 1, 1, shapes);

  std::vector<MenuEntry> menu;
  for (const auto& weights : shapes) {
    std::vector<IrreducibleFactor> factors;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      factors.push_back({weights[i], static_cast<int>(i)});
    }
    IrreducibleDescriptor module(std::move(factors));
    if (form != FormType::None && intrinsic_form(module) != form) continue;
    auto sizes = weights;
    for (auto& w : sizes) ++w;
    menu.push_back({std::move(module), tensor_multi(sizes, p)});
  }
  std::sort(menu.begin(), menu.end(), [](const MenuEntry& a, const MenuEntry& b) {
    return std::make_pair(a.module.dimension(), a.module.weights()) <
           std::make_pair(b.module.dimension(), b.module.weights());
  });
  return menu;
}

}  // namespace a1u
