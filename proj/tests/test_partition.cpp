#include <doctest.h>

#include <set>

#include "a1u/partition.hpp"
#include "support.hpp"

using namespace a1u;
using test::code_of;

TEST_CASE("partition basics") {
  const Partition p({1, 3, 3, 1});
  CHECK(p.parts() == std::vector<int>{3, 3, 1, 1});
  CHECK(p.total() == 8);
  CHECK(p.largest() == 3);
  CHECK(p.multiplicity(3) == 2);
  CHECK(p.trivial_count() == 2);
  CHECK(p.nontrivial_parts() == std::vector<int>{3, 3});
  CHECK(code_of([] { Partition q({2, 0}); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("parsing and printing") {
  CHECK(parse_partition("6,1,1,1,1").parts() == std::vector<int>{6, 1, 1, 1, 1});
  CHECK(to_string(parse_partition("5, 3")) == "5,3");
  CHECK(code_of([] { parse_partition("1,3"); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([] { parse_partition("3,x"); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([] { parse_partition(""); }) == ErrorCode::InvalidPartition);
  CHECK(code_of([] { parse_partition("3,-1"); }) == ErrorCode::InvalidPartition);
}

TEST_CASE("partitions_of") {
  // Counts of partitions of n: 1, 2, 3, 5, 7, 11, 15, 22.
  const std::vector<std::size_t> counts = {1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 1; n <= 8; ++n) {
    const auto all = partitions_of(n, n);
    CHECK(all.size() == counts[static_cast<std::size_t>(n - 1)]);
    std::set<Partition> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& q : all) CHECK(q.total() == n);
  }
  for (const auto& q : partitions_of(10, 3)) CHECK(q.largest() <= 3);
  CHECK(partitions_of(4, 2).size() == 3);
  CHECK(partitions_of(5, 5).front().parts() == std::vector<int>{5});
}
