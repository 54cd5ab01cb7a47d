#include "a1u/classical.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace a1u {

std::string_view to_string(Family f) {
  switch (f) {
    case Family::SL: return "SL";
    case Family::Sp: return "Sp";
    case Family::SO: return "SO";
  }
  return "?";
}

ClassicalGroup::ClassicalGroup(Family family, int dimension)
    : family_(family), dimension_(dimension) {
  const bool ok = [&] {
    switch (family) {
      case Family::SL: return dimension >= 2;
      case Family::Sp: return dimension >= 2 && dimension % 2 == 0;
      case Family::SO: return dimension >= 3;
    }
    return false;
  }();
  if (!ok) {
    throw Error(ErrorCode::InvalidGroup, "no group " + std::string(to_string(family)) + "(" +
                                             std::to_string(dimension) + ")");
  }
}

ClassicalGroup ClassicalGroup::from_name(std::string_view name, int dimension) {
  std::string upper;
  for (char c : name) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (upper == "A" || upper == "SL") return ClassicalGroup(Family::SL, dimension);
  if (upper == "C" || upper == "SP") return ClassicalGroup(Family::Sp, dimension);
  if (upper == "SO") return ClassicalGroup(Family::SO, dimension);
  if (upper == "B" || upper == "D") {
    const bool odd = dimension % 2 == 1;
    if ((upper == "B") != odd) {
      throw Error(ErrorCode::InvalidGroup, "type " + upper + " does not have natural dimension " +
                                               std::to_string(dimension));
    }
    return ClassicalGroup(Family::SO, dimension);
  }
  throw Error(ErrorCode::InvalidGroup, "unknown classical family '" + std::string(name) + "'");
}

FormType ClassicalGroup::form() const noexcept {
  switch (family_) {
    case Family::SL: return FormType::None;
    case Family::Sp: return FormType::Symplectic;
    case Family::SO: return FormType::Orthogonal;
  }
  return FormType::None;
}

bool ClassicalGroup::small_rank() const noexcept {
  return (family_ == Family::Sp && dimension_ < 4) || (family_ == Family::SO && dimension_ < 7);
}

std::string ClassicalGroup::name() const {
  return std::string(to_string(family_)) + "(" + std::to_string(dimension_) + ")";
}

std::optional<Error> validate(const ClassicalGroup& g, const Partition& lambda, int p) {
  if (!is_prime(p)) return Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (g.family() != Family::SL && p == 2) {
    return Error(ErrorCode::BadPrime, "p = 2 is bad for " + g.name());
  }
  if (lambda.total() != g.dimension()) {
    return Error(ErrorCode::DimensionMismatch,
                 "partition of " + std::to_string(lambda.total()) + " does not match " + g.name());
  }
  std::map<int, int> mult;
  for (int v : lambda.parts()) ++mult[v];
  for (const auto& [part, count] : mult) {
    if (count % 2 == 0) continue;
    if (g.family() == Family::Sp && part % 2 == 1) {
      return Error(ErrorCode::ParityViolation,
                   "odd block " + std::to_string(part) + " occurs an odd number of times in " +
                       g.name());
    }
    if (g.family() == Family::SO && part % 2 == 0) {
      return Error(ErrorCode::ParityViolation,
                   "even block " + std::to_string(part) + " occurs an odd number of times in " +
                       g.name());
    }
  }
  if (lambda.largest() == 1) {
    return Error(ErrorCode::IdentityElement, "the identity element is not classified");
  }
  return std::nullopt;
}

bool is_order_p(const Partition& lambda, int p) {
  return lambda.largest() >= 2 && lambda.largest() <= p;
}

std::string_view to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Unique: return "Unique";
    case Verdict::Kind::NonUnique: return "NonUnique";
    case Verdict::Kind::OutOfScope: return "OutOfScope";
  }
  return "?";
}

namespace {

struct Shape {
  bool single = false;   // (a, 1^r)
  bool doubled = false;  // (a, a, 1^r)
  int a = 0;
  int r = 0;
};

Shape shape_of(const Partition& lambda) {
  const auto nontrivial = lambda.nontrivial_parts();
  Shape s;
  s.r = lambda.trivial_count();
  if (nontrivial.size() == 1) {
    s.single = true;
    s.a = nontrivial[0];
  } else if (nontrivial.size() == 2 && nontrivial[0] == nontrivial[1]) {
    s.doubled = true;
    s.a = nontrivial[0];
  }
  return s;
}

bool in_table(Family f, const Shape& s, int p) {
  const bool even = s.a % 2 == 0;
  switch (f) {
    case Family::SL:
      return s.single && s.a <= p && ((s.a != 3 && s.a != p) || s.r == 0);
    case Family::Sp:
      return (s.single && even && s.a < p) || (s.doubled && !even && s.a < p);
    case Family::SO:
      return (s.single && !even && s.a <= p && (s.a != 3 || s.r == 0)) ||
             (s.doubled && even && s.a < p);
  }
  return false;
}

ModuleDescriptor with_trivial(int p, std::vector<Summand> summands, int r) {
  if (r > 0) summands.emplace_back(TrivialSummand{r});
  return ModuleDescriptor(p, std::move(summands));
}

IrreducibleDescriptor irr(std::vector<IrreducibleFactor> factors) {
  return IrreducibleDescriptor(std::move(factors));
}

std::optional<WitnessPair> witness_rule(const ClassicalGroup& g, const Partition& lambda, int p) {
  const Shape s = shape_of(lambda);
  const Family f = g.family();
  if (f == Family::SL && s.single && s.a == p && s.r > 0) {
    return WitnessPair{with_trivial(p, {IrrSummand{irr({{p - 1, 0}})}}, s.r),
                       with_trivial(p, {WeylSummand{p}}, s.r - 1)};
  }
  if ((f == Family::SL || f == Family::SO) && s.single && s.a == 3 && s.r > 0) {
    return WitnessPair{with_trivial(p, {IrrSummand{irr({{2, 0}})}}, s.r),
                       with_trivial(p, {IrrSummand{irr({{1, 0}, {1, 1}})}}, s.r - 1)};
  }
  if (f == Family::Sp && s.doubled && s.a == p) {
    return WitnessPair{with_trivial(p, {DoubledSummand{irr({{p - 1, 0}})}}, s.r),
                       with_trivial(p, {IrrSummand{irr({{1, 0}, {p - 1, 1}})}}, s.r)};
  }
  return std::nullopt;
}

}  // namespace

bool reduction_shape(const ClassicalGroup& g, const Partition& lambda, int p) {
  const Shape s = shape_of(lambda);
  const bool even = s.a % 2 == 0;
  switch (g.family()) {
    case Family::SL:
      return s.single && s.a <= p;
    case Family::Sp:
      return (s.single && even && s.a < p) || (s.doubled && !even && s.a <= p);
    case Family::SO:
      return (s.single && !even && s.a <= p) || (s.doubled && even && s.a < p);
  }
  return false;
}

Verdict unicity_verdict(const ClassicalGroup& g, const Partition& lambda, int p) {
  Verdict v;
  if (auto err = validate(g, lambda, p)) {
    v.reason = std::string(to_string(err->code())) + ": " + err->what();
    return v;
  }
  if (g.small_rank()) {
    v.reason = "small rank: " + g.name() + " is below the classified range";
    return v;
  }
  if (!is_order_p(lambda, p)) {
    v.reason = "NotOrderP: a block of size " + std::to_string(lambda.largest()) +
               " exceeds p = " + std::to_string(p);
    return v;
  }

  const Shape s = shape_of(lambda);
  if (in_table(g.family(), s, p)) {
    v.kind = Verdict::Kind::Unique;
    v.reason = lambda.trivial_count() == 0 && s.single ? "regular in " + g.name()
                                                       : "Jordan blocks in the unicity table";
    return v;
  }

  v.kind = Verdict::Kind::NonUnique;
  v.witnesses = witness_rule(g, lambda, p);
  if (v.witnesses) {
    v.reason = "two non-isomorphic module structures share these Jordan blocks";
  } else if (!reduction_shape(g, lambda, p)) {
    v.reason = "element lies in a commuting product of two subgroups; twisting one factor "
               "gives non-conjugate A1-subgroups";
  } else {
    v.reason = "Jordan blocks not in the unicity table";
  }
  return v;
}

WitnessPair witnesses(const ClassicalGroup& g, const Partition& lambda, int p) {
  const auto v = unicity_verdict(g, lambda, p);
  if (v.kind != Verdict::Kind::NonUnique || !v.witnesses) {
    throw Error(ErrorCode::NoWitnessRule, "no witness rule for " + g.name() + " with blocks (" +
                                              to_string(lambda) + ") at p = " +
                                              std::to_string(p));
  }
  return *v.witnesses;
}

}  // namespace a1u
