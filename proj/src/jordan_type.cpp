#include "a1u/jordan_type.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <tuple>

namespace a1u {

namespace {

void check_block(int b, int p) {
  if (b < 1 || b > p) {
    throw Error(ErrorCode::OrderExceedsP, "block size " + std::to_string(b) +
                                              " outside 1.." + std::to_string(p));
  }
}

int checked_prime(int p) {
  static_cast<void>(PrimeField{p});
  return p;
}

}  // namespace

JordanType::JordanType(int p, std::vector<int> blocks)
    : p_(checked_prime(p)), blocks_(std::move(blocks)) {
  for (int b : blocks_) check_block(b, p_);
  std::sort(blocks_.begin(), blocks_.end(), std::greater<>());
}

JordanType JordanType::trivial(int p, int n) {
  return JordanType(p, std::vector<int>(static_cast<std::size_t>(n), 1));
}

int JordanType::dimension() const noexcept {
  return std::accumulate(blocks_.begin(), blocks_.end(), 0);
}

JordanType JordanType::operator+(const JordanType& other) const {
  if (p_ != other.p_) throw Error(ErrorCode::PrimeMismatch, "direct sum over different primes");
  std::vector<int> merged = blocks_;
  merged.insert(merged.end(), other.blocks_.begin(), other.blocks_.end());
  return JordanType(p_, std::move(merged));
}

std::string to_string(const JordanType& t) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < t.blocks().size(); ++i) {
    if (i) os << ',';
    os << t.blocks()[i];
  }
  os << ')';
  return os.str();
}

std::string to_block_notation(const JordanType& t) {
  if (t.empty()) return "0";
  std::ostringstream os;
  const auto& b = t.blocks();
  for (std::size_t i = 0; i < b.size();) {
    std::size_t j = i;
    while (j < b.size() && b[j] == b[i]) ++j;
    if (i) os << " + ";
    os << 'J' << b[i];
    if (j - i > 1) os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

JordanType jordan_type_of_unipotent(const Matrix& m) {
  return JordanType(static_cast<int>(m.field().p()), jordan_blocks_of_unipotent(m));
}

JordanType tensor_pair_formula(int m, int n, int p) {
  checked_prime(p);
  check_block(m, p);
  check_block(n, p);
  if (m > n) std::swap(m, n);
  // For m <= n: s = max(0, m + n - p) blocks of size p, then the
  // Clebsch-Gordan series n - m + 1, n - m + 3, ... for the remaining m - s.
  const int s = std::max(0, m + n - p);
  std::vector<int> blocks(static_cast<std::size_t>(s), p);
  for (int i = 1; i <= m - s; ++i) blocks.push_back(n - m + 2 * i - 1);
  return JordanType(p, std::move(blocks));
}

JordanType tensor_pair_oracle(int m, int n, int p) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, JordanType> cache;

  const PrimeField field(p);
  check_block(m, p);
  check_block(n, p);
  if (m > n) std::swap(m, n);
  const auto key = std::make_tuple(m, n, p);
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto result = jordan_type_of_unipotent(
      kronecker(unipotent_jordan_block(field, static_cast<std::size_t>(m)),
                unipotent_jordan_block(field, static_cast<std::size_t>(n))));
  std::lock_guard lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

JordanType tensor_pair(int m, int n, int p, TensorMethod method) {
  return method == TensorMethod::Oracle ? tensor_pair_oracle(m, n, p)
                                        : tensor_pair_formula(m, n, p);
}

JordanType tensor(const JordanType& a, const JordanType& b, TensorMethod method) {
  if (a.p() != b.p()) throw Error(ErrorCode::PrimeMismatch, "tensor of types over different primes");
  std::vector<int> blocks;
  for (int x : a.blocks()) {
    for (int y : b.blocks()) {
      const auto t = tensor_pair(x, y, a.p(), method);
      blocks.insert(blocks.end(), t.blocks().begin(), t.blocks().end());
    }
  }
  return JordanType(a.p(), std::move(blocks));
}

JordanType tensor_multi(std::span<const int> sizes, int p, TensorMethod method) {
  JordanType acc(p, {1});
  for (int m : sizes) acc = tensor(acc, JordanType(p, {m}), method);
  return acc;
}

SummandProfile summand_profile(const JordanType& t) {
  SummandProfile profile;
  for (int b : t.blocks()) {
    if (b < 2) continue;
    ++profile.nontrivial_count;
    profile.distinct_nontrivial.insert(b);
  }
  return profile;
}

}  // namespace a1u
