#pragma once

// Unipotent classes of order p in SL, Sp and SO, described by their Jordan
// blocks on the natural module, and the decision of whether all A1-subgroups
// containing such an element are conjugate.

#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "a1u/error.hpp"
#include "a1u/partition.hpp"
#include "a1u/sl2_module.hpp"

namespace a1u {

enum class Family { SL, Sp, SO };

std::string_view to_string(Family f);

class ClassicalGroup {
 public:
  // Throws InvalidGroup for SL of dimension < 2, Sp of odd dimension or
  // dimension < 2, and SO of dimension < 3.
  ClassicalGroup(Family family, int dimension);

  // Accepts A/SL, C/Sp, B/D/SO (case-insensitive). B needs an odd dimension
  // and D an even one.
  static ClassicalGroup from_name(std::string_view name, int dimension);

  Family family() const noexcept { return family_; }
  int dimension() const noexcept { return dimension_; }
  // The form preserved on the natural module (None for SL).
  FormType form() const noexcept;
  // Below the dimension thresholds the classification does not cover
  // (Sp needs dimension >= 4, SO needs dimension >= 7).
  bool small_rank() const noexcept;

  // "SL(6)", "Sp(10)", "SO(7)".
  std::string name() const;

 private:
  Family family_;
  int dimension_;
};

// nullopt when the partition names a non-identity unipotent class of the
// group at this prime. Otherwise the first failing check, in the order
// NotPrime / BadPrime (p = 2 for Sp or SO), DimensionMismatch, ParityViolation
// (an odd part with odd multiplicity in Sp, an even part with odd
// multiplicity in SO), IdentityElement.
std::optional<Error> validate(const ClassicalGroup& g, const Partition& lambda, int p);

// Largest part in [2, p].
bool is_order_p(const Partition& lambda, int p);

struct WitnessPair {
  ModuleDescriptor first;
  ModuleDescriptor second;
};

struct Verdict {
  enum class Kind { Unique, NonUnique, OutOfScope };

  Kind kind = Kind::OutOfScope;
  std::optional<WitnessPair> witnesses;
  std::string reason;
};

std::string_view to_string(Verdict::Kind k);

// Whether the Jordan blocks have one of the shapes that can possibly give
// uniqueness once elements lying in a commuting product of two subgroups are
// excluded. Requires validate() to pass.
bool reduction_shape(const ClassicalGroup& g, const Partition& lambda, int p);

// The classification:
//   SL:  (l, 1^r), l <= p, and r = 0 whenever l is 3 or p;
//   Sp:  (a, 1^r) with a even, a < p; or (a, a, 1^r) with a odd, a < p;
//   SO:  (a, 1^r) with a odd, a <= p, and r = 0 when a = 3;
//        or (a, a, 1^r) with a even, a < p.
// Everything else that validates is NonUnique; witnesses are attached when a
// witness rule applies. Invalid, small-rank or not-order-p input gives
// OutOfScope with the failing reason.
Verdict unicity_verdict(const ClassicalGroup& g, const Partition& lambda, int p);

// Two non-isomorphic modules with Jordan type lambda, both admissible in g:
//   SL (p, 1^r), r > 0:       L(p-1) + r*triv      and W(p) + (r-1)*triv
//   SL/SO (3, 1^r), r > 0:    L(2) + r*triv        and L(1)*L(1)@1 + (r-1)*triv
//   Sp (p, p, 1^r):           2*L(p-1) + r*triv    and L(1)*L(p-1)@1 + r*triv
// Throws NoWitnessRule for anything else (including Unique verdicts).
WitnessPair witnesses(const ClassicalGroup& g, const Partition& lambda, int p);

}  // namespace a1u
