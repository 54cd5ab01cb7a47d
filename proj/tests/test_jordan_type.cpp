#include <doctest.h>

#include <array>
#include <vector>

#include "a1u/ffmatrix.hpp"
#include "a1u/jordan_type.hpp"
#include "support.hpp"

using namespace a1u;
using test::code_of;

namespace {

JordanType jt(int p, std::vector<int> b) { return JordanType(p, std::move(b)); }

// Jordan type by building the block-diagonal matrices and taking their
// Kronecker product.
JordanType kronecker_oracle(const JordanType& a, const JordanType& b) {
  const PrimeField f(a.p());
  auto block_matrix = [&](const JordanType& t) {
    std::vector<Matrix> blocks;
    for (int s : t.blocks()) blocks.push_back(unipotent_jordan_block(f, s));
    return direct_sum(blocks);
  };
  return jordan_type_of_unipotent(kronecker(block_matrix(a), block_matrix(b)));
}

}  // namespace

TEST_CASE("JordanType construction and printing") {
  const auto t = jt(5, {1, 5, 3});
  CHECK(t.blocks() == std::vector<int>{5, 3, 1});
  CHECK(t.dimension() == 9);
  CHECK(to_string(t) == "(5,3,1)");
  CHECK(to_block_notation(jt(5, {5, 3, 3, 1})) == "J5 + J3^2 + J1");
  CHECK(JordanType::trivial(3, 2) == jt(3, {1, 1}));
  CHECK(jt(7, {3}) + jt(7, {5, 1}) == jt(7, {5, 3, 1}));
  CHECK(code_of([] { jt(5, {6}); }) == ErrorCode::OrderExceedsP);
  CHECK(code_of([] { jt(5, {0}); }) == ErrorCode::OrderExceedsP);
  CHECK(code_of([] { jt(4, {1}); }) == ErrorCode::NotPrime);
}

TEST_CASE("two-fold tensor products") {
  for (int p : {3, 5, 7, 11}) {
    for (int n = 2; n < p; ++n) CHECK(tensor_pair(2, n, p) == jt(p, {n + 1, n - 1}));
    CHECK(tensor_pair(2, p, p) == jt(p, {p, p}));
    for (int n = 1; n <= p; ++n) CHECK(tensor_pair(1, n, p) == jt(p, {n}));
  }
  CHECK(tensor_pair(3, 3, 3) == jt(3, {3, 3, 3}));
  for (int p : {5, 7, 11}) CHECK(tensor_pair(3, 3, p) == jt(p, {5, 3, 1}));
  CHECK(tensor_pair(3, 4, 5) == jt(5, {5, 5, 2}));
  CHECK(tensor_pair(3, 4, 7) == jt(7, {6, 4, 2}));
  CHECK(code_of([] { tensor_pair(6, 2, 5); }) == ErrorCode::OrderExceedsP);
  CHECK(code_of([] { tensor_pair(0, 2, 5); }) == ErrorCode::OrderExceedsP);
}

TEST_CASE("formula and oracle agree") {
  for (int p : {2, 3, 5, 7}) {
    for (int m = 1; m <= p; ++m) {
      for (int n = 1; n <= p; ++n) {
        CHECK(tensor_pair(m, n, p, TensorMethod::Formula) ==
              tensor_pair(m, n, p, TensorMethod::Oracle));
      }
    }
  }
}

TEST_CASE("tensor of sums against a block-diagonal Kronecker oracle") {
  // Frozen from kronecker_oracle: (3,1) (x) (2) at p = 5.
  const auto expected = jt(5, {4, 2, 2});
  CHECK(kronecker_oracle(jt(5, {3, 1}), jt(5, {2})) == expected);
  CHECK(tensor(jt(5, {3, 1}), jt(5, {2})) == expected);

  const std::vector<std::vector<int>> samples = {{3, 1}, {2, 2}, {5, 2}, {4}, {3, 3, 1}};
  for (int p : {5, 7}) {
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        CHECK(tensor(jt(p, a), jt(p, b)) == kronecker_oracle(jt(p, a), jt(p, b)));
      }
    }
  }
  CHECK(tensor(jt(5, {4}), jt(5, {1})) == jt(5, {4}));
  CHECK(code_of([] { tensor(jt(5, {2}), jt(7, {2})); }) == ErrorCode::PrimeMismatch);
}

TEST_CASE("multi-fold tensor products") {
  const std::array<int, 3> j2 = {2, 2, 2};
  CHECK(tensor_multi(j2, 2) == jt(2, {2, 2, 2, 2}));
  CHECK(tensor_multi(j2, 3) == jt(3, {3, 3, 2}));
  for (int p : {5, 7, 11}) CHECK(tensor_multi(j2, p) == jt(p, {4, 2, 2}));
  const std::array<int, 1> single = {4};
  CHECK(tensor_multi(single, 5) == jt(5, {4}));
  CHECK(tensor(tensor(jt(3, {2}), jt(3, {2})), jt(3, {2})) == jt(3, {3, 3, 2}));
}

TEST_CASE("dimension, symmetry and associativity") {
  for (int p : {3, 5, 7}) {
    for (int a = 1; a <= p; ++a) {
      for (int b = 1; b <= p; ++b) {
        const auto ab = tensor_pair(a, b, p);
        CHECK(ab.dimension() == a * b);
        CHECK(ab == tensor_pair(b, a, p));
        for (int c = 1; c <= p; ++c) {
          CHECK(tensor(ab, jt(p, {c})) == tensor(jt(p, {a}), tensor_pair(b, c, p)));
        }
      }
    }
  }
}

TEST_CASE("enlarging a factor enlarges the blocks") {
  for (int p : {3, 5, 7, 11}) {
    for (int i = 2; i <= p; ++i) {
      for (int j = 2; j <= p; ++j) {
        const auto smaller = tensor_pair(i - 1, j, p).blocks();
        const auto larger = tensor_pair(i, j, p).blocks();
        REQUIRE(smaller.size() <= larger.size());
        for (std::size_t r = 0; r < smaller.size(); ++r) CHECK(larger[r] >= smaller[r]);
      }
    }
  }
}

TEST_CASE("summand profiles") {
  CHECK(summand_profile(jt(5, {5, 3, 1})) == SummandProfile{2, {5, 3}});
  CHECK(summand_profile(jt(7, {7, 7})) == SummandProfile{2, {7}});
  CHECK(summand_profile(jt(5, {1, 1, 1})) == SummandProfile{0, {}});
}

TEST_CASE("Jordan type of explicit matrices") {
  const PrimeField f(5);
  const auto m = kronecker(unipotent_jordan_block(f, 2), unipotent_jordan_block(f, 3));
  CHECK(jordan_type_of_unipotent(m) == jt(5, {4, 2}));
}
