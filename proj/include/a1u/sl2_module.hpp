#pragma once

// Descriptors for the SL2-modules used to build A1-subgroups: twisted tensor
// products of restricted irreducibles, doubled (hyperbolic) summands, Weyl and
// tilting modules in the range [p, 2p-2], and trivial summands.
//
// Every module here is self-dual, so M + M* is written Doubled(M).

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "a1u/ffmatrix.hpp"
#include "a1u/jordan_type.hpp"

namespace a1u {

// L(weight)^{F^twist}.
struct IrreducibleFactor {
  int weight = 1;
  int twist = 0;

  friend auto operator<=>(const IrreducibleFactor&, const IrreducibleFactor&) = default;
};

// Tensor product of twisted restricted irreducibles with pairwise distinct
// twists. Factors are kept sorted by twist.
class IrreducibleDescriptor {
 public:
  IrreducibleDescriptor() = default;
  // Throws DuplicateTwist when two factors share a twist, ParseError when
  // empty or when a twist is negative.
  explicit IrreducibleDescriptor(std::vector<IrreducibleFactor> factors);

  const std::vector<IrreducibleFactor>& factors() const noexcept { return factors_; }
  int dimension() const noexcept;
  int weight_sum() const noexcept;
  int min_twist() const noexcept;
  int max_twist() const noexcept;
  std::vector<int> weights() const;
  IrreducibleDescriptor shifted(int delta) const;

  // WeightNotRestricted unless every weight lies in 1..p-1.
  void validate(int p) const;

  friend auto operator<=>(const IrreducibleDescriptor&, const IrreducibleDescriptor&) = default;

 private:
  std::vector<IrreducibleFactor> factors_;
};

struct IrrSummand {
  IrreducibleDescriptor module;
  friend auto operator<=>(const IrrSummand&, const IrrSummand&) = default;
};
struct DoubledSummand {
  IrreducibleDescriptor module;
  friend auto operator<=>(const DoubledSummand&, const DoubledSummand&) = default;
};
struct WeylSummand {
  int weight = 0;
  friend auto operator<=>(const WeylSummand&, const WeylSummand&) = default;
};
struct TiltingSummand {
  int weight = 0;
  friend auto operator<=>(const TiltingSummand&, const TiltingSummand&) = default;
};
struct TrivialSummand {
  int multiplicity = 1;
  friend auto operator<=>(const TrivialSummand&, const TrivialSummand&) = default;
};

using Summand =
    std::variant<IrrSummand, DoubledSummand, WeylSummand, TiltingSummand, TrivialSummand>;

int dimension(const Summand& s, int p);
JordanType jordan_type(const Summand& s, int p);
std::string to_string(const Summand& s);

class ModuleDescriptor {
 public:
  // Validates every summand against p (restricted weights, Weyl/tilting range,
  // positive trivial multiplicity).
  ModuleDescriptor(int p, std::vector<Summand> summands);

  int p() const noexcept { return p_; }
  const std::vector<Summand>& summands() const noexcept { return summands_; }

  bool has_weyl_or_tilting() const noexcept;
  bool has_tilting() const noexcept;

  // Summands sorted into display order with all trivial summands merged; twists
  // are left alone.
  ModuleDescriptor normalized() const;

  friend bool operator==(const ModuleDescriptor&, const ModuleDescriptor&) = default;

 private:
  int p_;
  std::vector<Summand> summands_;
};

// Display order of summands: larger dimension first, then by kind, weights and
// twists; trivial summands last.
bool summand_display_less(const Summand& a, const Summand& b, int p);

int dimension(const ModuleDescriptor& d);
JordanType jordan_type(const ModuleDescriptor& d);

enum class FormType { None, Symplectic, Orthogonal };

std::string_view to_string(FormType f);

// Intrinsic form of an irreducible: symplectic iff the highest weight (the sum
// of the factor weights) is odd.
FormType intrinsic_form(const IrreducibleDescriptor& m);

// Which ambient classical groups a module can sit in.
struct FormSupport {
  bool symplectic = false;
  bool orthogonal = false;
  // False when a Weyl or tilting summand is present: such a module is not an
  // orthogonal sum of non-degenerate irreducibles and hyperbolic pairs.
  bool completely_reducible = true;

  friend bool operator==(const FormSupport&, const FormSupport&) = default;
};

// Irr: by parity of the weight sum. Doubled: both. Trivial(r): orthogonal,
// and symplectic iff r is even. Tilting(c): by parity of c. Weyl: neither (not
// self-dual). A sum supports a form iff every summand does.
FormSupport form_type(const ModuleDescriptor& d);

// FormType::None means SL: every module is admissible.
bool admissible_in(const ModuleDescriptor& d, FormType ambient);

// Explicit unipotent matrix over GF(p) for the image of [[1,1],[0,1]].
// Throws NotRealizable when a tilting summand is present.
Matrix realize(const ModuleDescriptor& d);

// Grammar (whitespace ignored):
//   descriptor := summand ("+" summand)*
//   summand    := irr | "2*" irr | "W(" int ")" | "T(" int ")" | int "*triv" | "triv"
//   irr        := factor ("*" factor)*
//   factor     := "L(" int ")" ["@" int]
ModuleDescriptor parse_descriptor(std::string_view text, int p);

// Inverse of parse_descriptor for the summands as stored.
std::string to_string(const ModuleDescriptor& d);
std::string to_string(const IrreducibleDescriptor& m);

}  // namespace a1u
