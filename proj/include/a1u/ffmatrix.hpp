#pragma once

// Dense matrices over the prime field GF(p).
//
// Entries are stored as canonical representatives 0..p-1 in row-major order,
// so two matrices are equal iff their entry vectors are equal. Everything is
// exact; there is no floating point in this module.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "a1u/error.hpp"

#ifndef A1U_MAX_MATRIX_DIM
#define A1U_MAX_MATRIX_DIM 4096
#endif

namespace a1u {

inline constexpr std::size_t kMaxMatrixDimension = A1U_MAX_MATRIX_DIM;

bool is_prime(std::int64_t n);

class PrimeField {
 public:
  using Element = std::uint32_t;

  // Throws ErrorCode::NotPrime unless p is a prime below 2^31.
  explicit PrimeField(std::int64_t p);

  std::uint32_t p() const noexcept { return p_; }

  Element reduce(std::int64_t v) const noexcept {
    const auto r = v % static_cast<std::int64_t>(p_);
    return static_cast<Element>(r < 0 ? r + p_ : r);
  }
  Element add(Element a, Element b) const noexcept {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<Element>(s >= p_ ? s - p_ : s);
  }
  Element sub(Element a, Element b) const noexcept {
    return a >= b ? a - b : static_cast<Element>(std::uint64_t{a} + p_ - b);
  }
  Element mul(Element a, Element b) const noexcept {
    return static_cast<Element>((std::uint64_t{a} * b) % p_);
  }
  Element neg(Element a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Element inv(Element a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

class Matrix {
 public:
  using Element = PrimeField::Element;

  // Zero matrix. Throws EmptyMatrix for a zero dimension and DimensionLimit
  // when either dimension exceeds kMaxMatrixDimension.
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);

  // Entries are reduced mod p; entries.size() must equal rows * cols.
  Matrix(PrimeField field, std::size_t rows, std::size_t cols,
         std::span<const std::int64_t> entries);

  static Matrix identity(PrimeField field, std::size_t n);

  const PrimeField& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Element operator()(std::size_t r, std::size_t c) const noexcept {
    return entries_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t v) noexcept {
    entries_[r * cols_ + c] = field_.reduce(v);
  }
  std::span<const Element> entries() const noexcept { return entries_; }
  std::span<const Element> row(std::size_t r) const noexcept {
    return std::span<const Element>(entries_).subspan(r * cols_, cols_);
  }

  bool is_zero() const noexcept;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> entries_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);

// Rank by Gaussian elimination over GF(p).
std::size_t rank(const Matrix& m);

// Block-diagonal direct sum of the given matrices (all over the same field).
Matrix direct_sum(std::span<const Matrix> blocks);

// m x m upper unitriangular matrix with ones on the superdiagonal.
// Sizes above p are rejected (OrderExceedsP): such a block has order > p.
Matrix unipotent_jordan_block(const PrimeField& field, std::size_t m);

Matrix kronecker(const Matrix& a, const Matrix& b);

// Action of the 2x2 matrix `a` on the degree-c homogeneous polynomials in
// x, y, written in the monomial basis x^c, x^(c-1)y, ..., y^c. Column j holds
// the image of x^(c-j) y^j under x -> a00 x + a10 y, y -> a01 x + a11 y.
Matrix sym_power(const Matrix& a, std::size_t c);

// Jordan block sizes (descending) of a unipotent matrix whose order divides p.
// Block counts come from the rank sequence of (m - I)^s. Throws NotOrderP when
// (m - I)^p != 0 and ShapeError for non-square input.
std::vector<int> jordan_blocks_of_unipotent(const Matrix& m);

}  // namespace a1u
