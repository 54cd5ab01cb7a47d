#pragma once

// Brute-force enumeration of completely reducible SL2-module structures on a
// natural module with prescribed Jordan type and form, up to shifting every
// Frobenius twist by the same constant.
//
// This is an independent route to the classical classification: a class count
// of one (with no growth as the twist bound rises) is what uniqueness looks
// like at the level of module structures.

#include <cstddef>
#include <vector>

#include "a1u/partition.hpp"
#include "a1u/sl2_module.hpp"

namespace a1u {

// A canonical completely reducible descriptor: only Irr, Doubled and Trivial
// summands, minimum twist 0 over all factors, identical Irr summands merged
// into Doubled ones, summands in display order.
struct EmbeddingClass {
  ModuleDescriptor descriptor;

  friend bool operator==(const EmbeddingClass&, const EmbeddingClass&) = default;
};

// Result order: by summand dimension sequence, then weight sequence, then twist
// sequence.
bool class_order_less(const EmbeddingClass& a, const EmbeddingClass& b);

// Throws NotCompletelyReducible when a Weyl or tilting summand is present.
EmbeddingClass canonicalize(const ModuleDescriptor& d);

struct SummandRestrictions {
  bool allow_doubled = true;
  // Largest permitted trivial summand; negative means unlimited.
  int max_trivial = -1;
};

struct EnumerationResult {
  std::vector<EmbeddingClass> classes;
  int max_twist = 0;
  std::size_t count = 0;
  // Count went up when the twist bound was raised from max_twist - 1.
  bool growth_flag = false;
};

// Every multiset of Irr / Doubled / Trivial summands with all twists in
// 0..max_twist, total Jordan type lambda, admissible for `form` (every Irr
// summand of that intrinsic form; Doubled always; Trivial(r) needs r even
// for Symplectic), reduced to canonical classes.
//
// Throws InvalidQuery unless sum(lambda) = dim, every part is <= p,
// max_twist >= 1, p is prime, and p is odd when form != None.
EnumerationResult enumerate(FormType form, int dim, const Partition& lambda, int p, int max_twist,
                            const SummandRestrictions& restrictions = {});

struct MenuEntry {
  IrreducibleDescriptor module;
  JordanType type;
};

// One representative per multiset of restricted weights: factors in
// ascending weight order carrying twists 0, 1, 2, ... Only irreducibles of
// the given intrinsic form (any, for None) and dimension <= max_dim; the
// trivial module is not listed. Sorted by dimension, then weights.
std::vector<MenuEntry> jordan_menu(FormType form, int p, int max_dim);

}  // namespace a1u
