#pragma once

// Jordan types of unipotent elements of order p, and how they behave under
// tensor products of k[u]-modules.

#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "a1u/ffmatrix.hpp"

namespace a1u {

// Multiset of Jordan block sizes of an element of order p, i.e. the formal
// sum J(n_1) + ... + J(n_t) of indecomposable k[u]-modules. Blocks are kept
// sorted descending; every block lies in 1..p.
class JordanType {
 public:
  // Throws NotPrime for a bad p and OrderExceedsP for blocks outside 1..p.
  JordanType(int p, std::vector<int> blocks);

  // Trivial type (1^n).
  static JordanType trivial(int p, int n);

  int p() const noexcept { return p_; }
  const std::vector<int>& blocks() const noexcept { return blocks_; }
  int dimension() const noexcept;
  bool empty() const noexcept { return blocks_.empty(); }

  // Concatenation of block multisets (direct sum of modules).
  JordanType operator+(const JordanType& other) const;

  friend bool operator==(const JordanType&, const JordanType&) = default;
  friend auto operator<=>(const JordanType&, const JordanType&) = default;

 private:
  int p_;
  std::vector<int> blocks_;
};

// "(5,3,1)".
std::string to_string(const JordanType& t);
// "J5 + J3^2 + J1", the block notation used in the printed tables.
std::string to_block_notation(const JordanType& t);

JordanType jordan_type_of_unipotent(const Matrix& m);

enum class TensorMethod {
  Formula,  // closed-form decomposition
  Oracle,   // Kronecker product + rank sequence over GF(p)
};

// Jordan type of J(m) (x) J(n). Both methods must agree; the formula is the
// default and the oracle is memoized per (m, n, p).
JordanType tensor_pair(int m, int n, int p, TensorMethod method = TensorMethod::Formula);
JordanType tensor_pair_formula(int m, int n, int p);
JordanType tensor_pair_oracle(int m, int n, int p);

// Bilinear extension over direct sums. Throws PrimeMismatch.
JordanType tensor(const JordanType& a, const JordanType& b,
                  TensorMethod method = TensorMethod::Formula);

// J(m_1) (x) ... (x) J(m_t), folded left to right.
JordanType tensor_multi(std::span<const int> sizes, int p,
                        TensorMethod method = TensorMethod::Formula);

struct SummandProfile {
  std::size_t nontrivial_count = 0;
  std::set<int> distinct_nontrivial;

  friend bool operator==(const SummandProfile&, const SummandProfile&) = default;
};

// Nontrivial means block size >= 2.
SummandProfile summand_profile(const JordanType& t);

}  // namespace a1u
