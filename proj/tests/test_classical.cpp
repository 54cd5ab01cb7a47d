#include <doctest.h>

#include "a1u/classical.hpp"
#include "support.hpp"

using namespace a1u;
using test::code_of;

namespace {

using Kind = Verdict::Kind;

Kind verdict(Family f, int dim, const char* lambda, int p) {
  return unicity_verdict(ClassicalGroup(f, dim), parse_partition(lambda), p).kind;
}

std::optional<ErrorCode> failure(Family f, int dim, const char* lambda, int p) {
  const auto e = validate(ClassicalGroup(f, dim), parse_partition(lambda), p);
  if (!e) return std::nullopt;
  return e->code();
}

}  // namespace

TEST_CASE("group names") {
  CHECK(ClassicalGroup::from_name("C", 10).name() == "Sp(10)");
  CHECK(ClassicalGroup::from_name("b", 7).family() == Family::SO);
  CHECK(ClassicalGroup::from_name("D", 8).name() == "SO(8)");
  CHECK(ClassicalGroup::from_name("SL", 4).form() == FormType::None);
  CHECK(code_of([] { ClassicalGroup::from_name("B", 8); }) == ErrorCode::InvalidGroup);
  CHECK(code_of([] { ClassicalGroup::from_name("D", 7); }) == ErrorCode::InvalidGroup);
  CHECK(code_of([] { ClassicalGroup::from_name("G", 7); }) == ErrorCode::InvalidGroup);
  CHECK(code_of([] { ClassicalGroup(Family::Sp, 7); }) == ErrorCode::InvalidGroup);
}

TEST_CASE("validation") {
  CHECK_FALSE(failure(Family::Sp, 8, "3,3,1,1", 5));
  CHECK(failure(Family::Sp, 6, "3,2,1", 5) == ErrorCode::ParityViolation);
  CHECK(failure(Family::SO, 7, "4,2,1", 5) == ErrorCode::ParityViolation);
  CHECK(failure(Family::SO, 7, "1,1,1,1,1,1,1", 5) == ErrorCode::IdentityElement);
  CHECK(failure(Family::SL, 4, "3,1", 4) == ErrorCode::NotPrime);
  CHECK(failure(Family::Sp, 4, "2,2", 2) == ErrorCode::BadPrime);
  CHECK(failure(Family::SL, 4, "3,1,1", 5) == ErrorCode::DimensionMismatch);
  CHECK_FALSE(failure(Family::SL, 2, "2", 2));
}

TEST_CASE("order p") {
  CHECK(is_order_p(parse_partition("5,1,1"), 5));
  CHECK_FALSE(is_order_p(parse_partition("6,1"), 5));
  CHECK_FALSE(is_order_p(parse_partition("1,1,1"), 5));
}

TEST_CASE("unicity verdicts") {
  CHECK(verdict(Family::Sp, 10, "6,1,1,1,1", 7) == Kind::Unique);
  CHECK(verdict(Family::SL, 6, "5,1", 5) == Kind::NonUnique);
  CHECK(verdict(Family::SO, 8, "3,3,1,1", 5) == Kind::NonUnique);
  CHECK(verdict(Family::SO, 7, "7", 7) == Kind::Unique);
  CHECK(verdict(Family::SL, 4, "4", 5) == Kind::Unique);
  CHECK(verdict(Family::SL, 3, "3", 5) == Kind::Unique);
  CHECK(verdict(Family::SL, 4, "3,1", 5) == Kind::NonUnique);
  CHECK(verdict(Family::SL, 5, "5", 5) == Kind::Unique);
  CHECK(verdict(Family::Sp, 10, "5,5", 5) == Kind::NonUnique);
  CHECK(verdict(Family::Sp, 10, "5,5", 7) == Kind::Unique);
  CHECK(verdict(Family::Sp, 6, "4,2", 5) == Kind::NonUnique);
  CHECK(verdict(Family::SO, 7, "3,1,1,1,1", 5) == Kind::NonUnique);
  CHECK(verdict(Family::SO, 9, "5,1,1,1,1", 5) == Kind::Unique);
  CHECK(verdict(Family::SO, 8, "2,2,1,1,1,1", 5) == Kind::Unique);
  CHECK(verdict(Family::SO, 9, "5,3,1", 7) == Kind::NonUnique);
}

TEST_CASE("out of scope") {
  CHECK(verdict(Family::Sp, 2, "2", 5) == Kind::OutOfScope);
  CHECK(verdict(Family::SO, 5, "5", 5) == Kind::OutOfScope);
  CHECK(verdict(Family::SL, 7, "6,1", 5) == Kind::OutOfScope);
  CHECK(verdict(Family::Sp, 6, "3,2,1", 5) == Kind::OutOfScope);
  const auto v = unicity_verdict(ClassicalGroup(Family::SL, 7), parse_partition("6,1"), 5);
  CHECK(v.reason.find("NotOrderP") == 0);
}

TEST_CASE("reduction shapes") {
  const auto shape = [](Family f, int dim, const char* l, int p) {
    return reduction_shape(ClassicalGroup(f, dim), parse_partition(l), p);
  };
  CHECK(shape(Family::Sp, 8, "3,3,1,1", 5));
  CHECK_FALSE(shape(Family::Sp, 8, "4,2,1,1", 5));
  CHECK_FALSE(shape(Family::SO, 9, "5,3,1", 7));
}

TEST_CASE("Unique implies the reduction shape") {
  for (int p : {3, 5, 7, 11}) {
    for (Family f : {Family::SL, Family::Sp, Family::SO}) {
      for (int dim = 3; dim <= 14; ++dim) {
        if (f == Family::Sp && dim % 2) continue;
        const ClassicalGroup g(f, dim);
        for (const auto& lambda : partitions_of(dim, p)) {
          if (validate(g, lambda, p)) continue;
          if (unicity_verdict(g, lambda, p).kind == Kind::Unique) {
            CHECK(reduction_shape(g, lambda, p));
          }
        }
      }
    }
  }
}

TEST_CASE("witness pairs") {
  auto pair_of = [](Family f, int dim, const char* l, int p) {
    const auto w = witnesses(ClassicalGroup(f, dim), parse_partition(l), p);
    return std::make_pair(to_string(w.first), to_string(w.second));
  };
  CHECK(pair_of(Family::SL, 6, "5,1", 5) == std::make_pair(std::string("L(4)+triv"),
                                                          std::string("W(5)")));
  CHECK(pair_of(Family::SO, 7, "3,1,1,1,1", 5) ==
        std::make_pair(std::string("L(2)+4*triv"), std::string("L(1)*L(1)@1+3*triv")));
  CHECK(pair_of(Family::Sp, 10, "5,5", 5) ==
        std::make_pair(std::string("2*L(4)"), std::string("L(1)*L(4)@1")));
  CHECK(code_of([] {
          witnesses(ClassicalGroup(Family::Sp, 10), parse_partition("6,1,1,1,1"), 7);
        }) == ErrorCode::NoWitnessRule);
  CHECK(code_of([] {
          witnesses(ClassicalGroup(Family::SO, 9), parse_partition("5,3,1"), 7);
        }) == ErrorCode::NoWitnessRule);
}
