#include "a1u/ffmatrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace a1u {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::int64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::int64_t p) : p_(0) {
  if (p >= (std::int64_t{1} << 31) || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not a supported prime");
  }
  p_ = static_cast<std::uint32_t>(p);
}

PrimeField::Element PrimeField::inv(Element a) const {
  if (a == 0) throw Error(ErrorCode::ShapeError, "inverse of zero in GF(p)");
  // Fermat: a^(p-2).
  Element result = 1;
  Element base = a;
  for (std::uint32_t e = p_ - 2; e != 0; e >>= 1) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

namespace {

void check_dimensions(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw Error(ErrorCode::EmptyMatrix, "matrix dimensions must be positive");
  }
  if (rows > kMaxMatrixDimension || cols > kMaxMatrixDimension) {
    throw Error(ErrorCode::DimensionLimit,
                "matrix dimension " + std::to_string(std::max(rows, cols)) +
                    " exceeds the configured limit " +
                    std::to_string(kMaxMatrixDimension));
  }
}

void check_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::PrimeMismatch, "matrices over different prime fields");
  }
}

}  // namespace

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols) {
  check_dimensions(rows, cols);
  entries_.assign(rows * cols, 0);
}

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols,
               std::span<const std::int64_t> entries)
    : Matrix(field, rows, cols) {
  if (entries.size() != rows * cols) {
    throw Error(ErrorCode::ShapeError, "entry count does not match rows * cols");
  }
  std::transform(entries.begin(), entries.end(), entries_.begin(),
                 [&](std::int64_t v) { return field_.reduce(v); });
}

Matrix Matrix::identity(PrimeField field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.entries_[i * n + i] = 1;
  return m;
}

bool Matrix::is_zero() const noexcept {
  return std::all_of(entries_.begin(), entries_.end(), [](Element e) { return e == 0; });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeError, "inner dimensions do not agree");
  }
  const auto& f = a.field();
  const std::uint64_t p = f.p();
  const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
  // p < 2^31, so x * y + acc fits in 64 bits.
  std::vector<std::uint64_t> acc(m);
  Matrix out(f, n, m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint64_t x = a(i, t);
      if (x == 0) continue;
      const auto brow = b.row(t);
      for (std::size_t j = 0; j < m; ++j) {
        if (brow[j] != 0) acc[j] = (acc[j] + x * brow[j]) % p;
      }
    }
    for (std::size_t j = 0; j < m; ++j) out.set(i, j, static_cast<std::int64_t>(acc[j]));
  }
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeError, "matrix shapes differ");
  }
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out.set(i, j, a.field().sub(a(i, j), b(i, j)));
    }
  }
  return out;
}

std::size_t rank(const Matrix& m) {
  const auto& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<PrimeField::Element> w(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t r, std::size_t c) -> PrimeField::Element& { return w[r * cols + c]; };

  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && at(pivot, c) == 0) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(at(pivot, j), at(r, j));
    }
    const auto inv = f.inv(at(r, c));
    for (std::size_t j = c; j < cols; ++j) at(r, j) = f.mul(at(r, j), inv);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const auto factor = at(i, c);
      if (factor == 0) continue;
      for (std::size_t j = c; j < cols; ++j) {
        if (at(r, j) != 0) at(i, j) = f.sub(at(i, j), f.mul(factor, at(r, j)));
      }
    }
    ++r;
  }
  return r;
}

Matrix direct_sum(std::span<const Matrix> blocks) {
  if (blocks.empty()) throw Error(ErrorCode::EmptyMatrix, "direct sum of no blocks");
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    check_same_field(blocks.front(), b);
    rows += b.rows();
    cols += b.cols();
  }
  Matrix out(blocks.front().field(), rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(r0 + i, c0 + j, b(i, j));
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return out;
}

Matrix unipotent_jordan_block(const PrimeField& field, std::size_t m) {
  if (m == 0) throw Error(ErrorCode::EmptyMatrix, "Jordan block of size 0");
  if (m > field.p()) {
    throw Error(ErrorCode::OrderExceedsP, "Jordan block of size " + std::to_string(m) +
                                              " has order greater than p = " +
                                              std::to_string(field.p()));
  }
  Matrix j = Matrix::identity(field, m);
  for (std::size_t i = 0; i + 1 < m; ++i) j.set(i, i + 1, 1);
  return j;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
  check_same_field(a, b);
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  const auto& f = a.field();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out.set(i * b.rows() + k, j * b.cols() + l, f.mul(x, b(k, l)));
        }
      }
    }
  }
  return out;
}

namespace {

using Poly = std::vector<PrimeField::Element>;  // coefficient of x^(deg-i) y^i at i

Poly poly_mul(const PrimeField& f, const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
  }
  return out;
}

Poly poly_pow(const PrimeField& f, const Poly& base, std::size_t e) {
  Poly out{1};
  for (std::size_t i = 0; i < e; ++i) out = poly_mul(f, out, base);
  return out;
}

}  // namespace

Matrix sym_power(const Matrix& a, std::size_t c) {
  if (a.rows() != 2 || a.cols() != 2) {
    throw Error(ErrorCode::ShapeError, "sym_power expects a 2x2 matrix");
  }
  const auto& f = a.field();
  const Poly image_x{a(0, 0), a(1, 0)};
  const Poly image_y{a(0, 1), a(1, 1)};
  Matrix out(f, c + 1, c + 1);
  for (std::size_t j = 0; j <= c; ++j) {
    const Poly col = poly_mul(f, poly_pow(f, image_x, c - j), poly_pow(f, image_y, j));
    for (std::size_t i = 0; i <= c; ++i) out.set(i, j, col[i]);
  }
  return out;
}

std::vector<int> jordan_blocks_of_unipotent(const Matrix& m) {
  if (!m.square()) throw Error(ErrorCode::ShapeError, "Jordan type of a non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t p = m.field().p();
  const Matrix nil = m - Matrix::identity(m.field(), n);

  // ranks[s] = rank(nil^s); ranks[0] = n.
  std::vector<std::size_t> ranks{n};
  Matrix power = nil;
  for (std::size_t s = 1; s <= p; ++s) {
    const std::size_t r = power.is_zero() ? 0 : rank(power);
    ranks.push_back(r);
    if (r == 0) break;
    if (s < p) power = power * nil;
  }
  if (ranks.back() != 0) {
    throw Error(ErrorCode::NotOrderP, "matrix is not unipotent of order dividing p");
  }

  // #{blocks of size >= s} = ranks[s-1] - ranks[s].
  std::vector<int> blocks;
  const std::size_t top = ranks.size() - 1;
  for (std::size_t s = top; s >= 1; --s) {
    const std::size_t at_least_s = ranks[s - 1] - ranks[s];
    const std::size_t at_least_next = s + 1 <= top ? ranks[s] - ranks[s + 1] : 0;
    blocks.insert(blocks.end(), at_least_s - at_least_next, static_cast<int>(s));
  }
  return blocks;
}

}  // namespace a1u
