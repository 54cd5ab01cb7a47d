#include <doctest.h>

#include <vector>

#include "a1u/ffmatrix.hpp"
#include "a1u/sl2_module.hpp"
#include "support.hpp"

using namespace a1u;
using test::code_of;

namespace {

JordanType jt(int p, std::vector<int> b) { return JordanType(p, std::move(b)); }

ModuleDescriptor parse(const char* text, int p) { return parse_descriptor(text, p); }

// Every irreducible with factors of the given weights at twists 0, 1, 2, ...
// in every weight order, of dimension <= max_dim.
void irreducibles(int p, int max_dim, std::vector<IrreducibleFactor>& cur, int dim,
                  std::vector<IrreducibleDescriptor>& out) {
  if (!cur.empty()) out.emplace_back(cur);
  for (int w = 1; w <= p - 1; ++w) {
    if (dim * (w + 1) > max_dim) break;
    cur.push_back({w, static_cast<int>(cur.size())});
    irreducibles(p, max_dim, cur, dim * (w + 1), out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("dimensions") {
  CHECK(dimension(parse("L(4)", 5)) == 5);
  CHECK(dimension(parse("T(10)", 7)) == 14);
  CHECK(dimension(parse("3*triv", 5)) == 3);
  CHECK(dimension(parse("2*L(1)*L(2)@1", 5)) == 12);
  CHECK(dimension(parse("W(6)+triv", 5)) == 8);
}

TEST_CASE("Jordan types of modules") {
  CHECK(jordan_type(parse("L(1)*L(3)@1", 5)) == jt(5, {5, 3}));
  CHECK(jordan_type(parse("L(2)*L(2)@1", 7)) == jt(7, {5, 3, 1}));
  CHECK(jordan_type(parse("L(1)*L(5)@1", 7)) == jt(7, {7, 5}));
  for (int p : {5, 7, 11}) {
    const auto d = parse_descriptor("W(" + std::to_string(p) + ")+2*triv", p);
    CHECK(jordan_type(d) == jt(p, {p, 1, 1, 1}));
  }
  for (int p : {5, 7}) {
    for (int c = p; c <= 2 * p - 2; ++c) {
      CHECK(jordan_type(ModuleDescriptor(p, {TiltingSummand{c}})) == jt(p, {p, p}));
      CHECK(jordan_type(ModuleDescriptor(p, {WeylSummand{c}})) == jt(p, {p, c - p + 1}));
    }
  }
}

TEST_CASE("forms") {
  const auto support = [](const char* t, int p) { return form_type(parse(t, p)); };
  CHECK(support("L(4)", 5) == FormSupport{false, true, true});
  CHECK(support("L(3)", 5) == FormSupport{true, false, true});
  CHECK(support("L(1)*L(1)@1", 5) == FormSupport{false, true, true});
  CHECK(support("2*L(2)", 5) == FormSupport{true, true, true});
  CHECK(support("3*triv", 5) == FormSupport{false, true, true});
  CHECK(support("2*triv", 5) == FormSupport{true, true, true});
  CHECK(support("T(7)", 5) == FormSupport{true, false, false});
  CHECK(support("T(8)", 5) == FormSupport{false, true, false});
  CHECK(support("W(6)", 5) == FormSupport{false, false, false});
  CHECK(support("L(3)+L(1)@1", 5) == FormSupport{true, false, true});
  CHECK(support("L(3)+L(2)", 5) == FormSupport{false, false, true});

  CHECK(admissible_in(parse("L(3)+L(2)", 5), FormType::None));
  CHECK(admissible_in(parse("2*L(2)+2*triv", 5), FormType::Symplectic));
  CHECK_FALSE(admissible_in(parse("L(2)+triv", 5), FormType::Symplectic));

  // Only the parity of the weight sum matters.
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 4; ++b) {
      const IrreducibleDescriptor m({{a, 0}, {b, 1}});
      CHECK((intrinsic_form(m) == FormType::Symplectic) == ((a + b) % 2 == 1));
    }
  }
}

TEST_CASE("realization") {
  CHECK(jordan_type_of_unipotent(realize(parse("L(2)", 5))) == jt(5, {3}));
  const auto m = realize(parse("L(1)*L(1)@1", 5));
  CHECK(m.rows() == 4);
  CHECK(jordan_type_of_unipotent(m) == jt(5, {3, 1}));
  CHECK(code_of([] { realize(parse("T(7)", 7)); }) == ErrorCode::NotRealizable);
}

TEST_CASE("realize agrees with jordan_type up to dimension 14") {
  for (int p : {5, 7}) {
    std::vector<IrreducibleDescriptor> irr;
    std::vector<IrreducibleFactor> cur;
    irreducibles(p, 14, cur, 1, irr);
    std::vector<ModuleDescriptor> all;
    for (const auto& m : irr) {
      all.emplace_back(p, std::vector<Summand>{IrrSummand{m}});
      if (2 * m.dimension() <= 14) all.emplace_back(p, std::vector<Summand>{DoubledSummand{m}});
      if (m.dimension() + 3 <= 14) {
        all.emplace_back(p, std::vector<Summand>{IrrSummand{m}, TrivialSummand{3}});
      }
    }
    for (int c = p; c <= 2 * p - 2 && c + 1 <= 14; ++c) {
      all.emplace_back(p, std::vector<Summand>{WeylSummand{c}});
      if (c + 4 <= 14) {
        all.emplace_back(p, std::vector<Summand>{WeylSummand{c}, IrrSummand{irr.front()}});
      }
    }
    for (const auto& d : all) {
      CHECK_MESSAGE(jordan_type_of_unipotent(realize(d)) == jordan_type(d), to_string(d));
    }
  }
}

TEST_CASE("twist shifts leave Jordan types unchanged") {
  const IrreducibleDescriptor m({{1, 0}, {2, 1}, {3, 3}});
  for (int s = 0; s <= 4; ++s) {
    const ModuleDescriptor a(7, {IrrSummand{m}});
    const ModuleDescriptor b(7, {IrrSummand{m.shifted(s)}});
    CHECK(jordan_type(a) == jordan_type(b));
    CHECK(jordan_type_of_unipotent(realize(a)) == jordan_type_of_unipotent(realize(b)));
  }
}

TEST_CASE("parsing") {
  const auto d = parse("L(1)*L(3)@1", 5);
  REQUIRE(d.summands().size() == 1);
  const auto& irr = std::get<IrrSummand>(d.summands()[0]).module;
  CHECK(irr.factors() == std::vector<IrreducibleFactor>{{1, 0}, {3, 1}});

  const auto e = parse("2*L(4) + 3*triv", 5);
  REQUIRE(e.summands().size() == 2);
  CHECK(std::holds_alternative<DoubledSummand>(e.summands()[0]));
  CHECK(std::get<TrivialSummand>(e.summands()[1]).multiplicity == 3);

  CHECK(code_of([] { parse("L(5)", 5); }) == ErrorCode::WeightNotRestricted);
  CHECK(code_of([] { parse("L(0)", 5); }) == ErrorCode::WeightNotRestricted);
  CHECK(code_of([] { parse("L(1)*L(2)", 5); }) == ErrorCode::DuplicateTwist);
  CHECK(code_of([] { parse("W(4)", 5); }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([] { parse("T(9)", 5); }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([] { parse("L(1", 5); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("3*L(1)", 5); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("", 5); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("L(1)", 6); }) == ErrorCode::NotPrime);
}

TEST_CASE("printing round-trips") {
  for (const char* text : {"L(1)*L(3)@1", "2*L(4)+3*triv", "W(6)+T(7)+triv", "L(2)@2",
                           "L(1)*L(1)@1*L(2)@2+L(4)"}) {
    const auto d = parse(text, 5);
    CHECK(to_string(d) == text);
    CHECK(parse_descriptor(to_string(d), 5) == d);
  }
  CHECK(to_string(parse(" L( 1 ) * L(3)@1 ", 5)) == "L(1)*L(3)@1");
  CHECK(to_string(parse("L(2)@0", 5)) == "L(2)");
}

TEST_CASE("normalized order") {
  const auto d = parse("triv+L(2)+L(4)+2*triv", 5).normalized();
  CHECK(to_string(d) == "L(4)+L(2)+3*triv");
}
