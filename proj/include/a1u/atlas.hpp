#pragma once

// Per-class verdicts for exceptional groups at good primes: does every A1
// through a unipotent class lie in one conjugacy class? Pure data plus lookup;
// the table itself lives in data/exceptional_atlas.txt and is compiled into the library.
//
// Verdicts assume the class has elements of order exactly p. That is only
// checked for the regular class (order p iff p >= Coxeter number); for every
// other label the caller supplies the hypothesis.

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace a1u {

enum class ExceptionalType { G2, F4, E6, E7, E8 };

std::string_view to_string(ExceptionalType t);
// Throws InvalidGroup.
ExceptionalType exceptional_from_name(std::string_view name);

int coxeter_number(ExceptionalType t);
const std::vector<int>& bad_primes(ExceptionalType t);
// p prime and larger than every bad prime.
bool is_good_prime(ExceptionalType t, int p);

// Unipotent class labels of the group in good characteristic, identity class
// excluded. External data: the standard Bala-Carter lists.
const std::vector<std::string>& class_labels(ExceptionalType t);
// Trims whitespace and rewrites a Unicode tilde-A ("Ã") as "~A". Does not
// check membership.
std::string normalize_label(std::string_view label);
bool is_known_label(ExceptionalType t, std::string_view label);

enum class PrimeCondition { Good, Eq5, Eq7, Ge5, Ge7, Ge11 };

std::string_view to_string(PrimeCondition c);
bool satisfies(PrimeCondition c, int p);

struct AtlasRecord {
  ExceptionalType group;
  PrimeCondition condition;
  std::string label;
  bool unique;
  int line = 0;
};

struct AtlasVerdict {
  enum class Kind { Unique, NonUnique, BadPrime, UnknownLabel };

  Kind kind = Kind::NonUnique;
  std::string note;
};

std::string_view to_string(AtlasVerdict::Kind k);

class Atlas {
 public:
  // Parses `group|p_condition|label|verdict` records; '#' starts a comment.
  // Throws DataError on a malformed line, an unknown label, or a Unique and a
  // NonUnique record that both apply to the same group, label and prime.
  static Atlas parse(std::string_view text);
  static Atlas load(const std::string& path);
  // The table shipped with the library.
  static const Atlas& builtin();

  const std::vector<AtlasRecord>& records() const noexcept { return records_; }

  // Throws NotPrime when p is not prime. Otherwise BadPrime, UnknownLabel,
  // Unique when some Unique record applies, else NonUnique.
  AtlasVerdict verdict(ExceptionalType g, int p, std::string_view label) const;

  // Labels whose verdict is Unique at p, in label-list order. Throws BadPrime
  // (or NotPrime).
  std::vector<std::string> list_unique(ExceptionalType g, int p) const;

 private:
  std::vector<AtlasRecord> records_;
};

}  // namespace a1u
