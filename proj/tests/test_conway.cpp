#include <doctest.h>

#include <random>

#include "tanglelab/coloring.hpp"
#include "tanglelab/conway.hpp"
#include "tanglelab/errors.hpp"

using namespace tanglelab;

namespace {

TangleExpr random_rational(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> twist(-3, 3);
  if (depth == 0) return TangleExpr::integer(twist(rng));
  switch (rng() % 3) {
    case 0:
      return rotate(random_rational(rng, depth - 1));
    case 1:
      return compose(random_rational(rng, depth - 1), TangleExpr::integer(twist(rng)));
    default:
      return compose(TangleExpr::integer(twist(rng)), random_rational(rng, depth - 1));
  }
}

}  // namespace

TEST_SUITE("conway") {

TEST_CASE("fractions") {
  CHECK(Fraction(6, -4) == Fraction(-3, 2));
  CHECK(Fraction(-5, 0) == Fraction::infinity());
  CHECK(Fraction(0, 7) == Fraction(0));
  CHECK(Fraction(1, 2) + Fraction(1, 3) == Fraction(5, 6));
  CHECK(Fraction(2, 3).reciprocal() == Fraction(3, 2));
  CHECK(Fraction(0).reciprocal() == Fraction::infinity());
  CHECK(parse_fraction("-7/3") == Fraction(-7, 3));
  CHECK(parse_fraction("inf").is_infinite());
  CHECK(parse_fraction("4") == Fraction(4));
  CHECK(Fraction(-7, 3).to_string() == "-7/3");
  CHECK_THROWS_AS(parse_fraction("1/"), InputError);
  CHECK_THROWS_AS(parse_fraction("0/0"), InputError);
  CHECK_THROWS_AS(parse_fraction("99999999999999999999"), InputError);
  CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), InputError);
}

TEST_CASE("parse and print round trip") {
  for (const char* s : {"0", "-3", "inf", "r(2)", "(1*r(-2))", "T(2,3,-1)", "r((T(1,1)*inf))"}) {
    CHECK(to_string(parse_conway(s)) == s);
  }
  CHECK(to_string(parse_conway(" ( 1 *  r( 2 ) ) ")) == "(1*r(2))");
}

TEST_CASE("parse errors carry a position") {
  try {
    parse_conway("(1*r(2)");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_conway("T()"), ParseError);
  CHECK_THROWS_AS(parse_conway("1 2"), ParseError);
  CHECK_THROWS_AS(parse_conway("q"), ParseError);
}

TEST_CASE("continued fractions") {
  CHECK(continued_fraction_value({2, 3}) == Fraction(7, 2));
  CHECK(continued_fraction_value({2, 3, 2}) == Fraction(16, 7));
  CHECK(continued_fraction_terms(Fraction(16, 7)) == std::vector<std::int64_t>{2, 3, 2});
  CHECK(continued_fraction_terms(Fraction(-4)) == std::vector<std::int64_t>{-4});
  std::mt19937_64 rng(9);
  for (int i = 0; i < 500; ++i) {
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 200);
    const std::int64_t p = static_cast<std::int64_t>(rng() % 401) - 200;
    const Fraction f(p, q);
    CHECK(continued_fraction_value(continued_fraction_terms(f)) == f);
    CHECK(slope(expand_rational(continued_fraction_terms(f))) == f);
  }
  CHECK_THROWS_AS(continued_fraction_terms(Fraction::infinity()), InputError);
}

TEST_CASE("slope rules") {
  CHECK(slope(parse_conway("inf")).is_infinite());
  CHECK(slope(parse_conway("r(0)")).is_infinite());
  CHECK(slope(parse_conway("r(3)")) == Fraction(-1, 3));
  CHECK(slope(parse_conway("(2*r(3))")) == Fraction(5, 3));
  CHECK(slope(parse_conway("T(2,3)")) == Fraction(7, 2));
  CHECK_FALSE(is_rational(parse_conway("(r(2)*r(2))")));
  CHECK_THROWS_AS(slope(parse_conway("(r(2)*r(2))")), NotRational);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 300; ++i) {
    const TangleExpr e = random_rational(rng, 5);
    const Fraction f = slope(e);
    CHECK(slope(rotate(e)) == (f.is_infinite() ? Fraction(0) : -f.reciprocal()));
    CHECK(slope(compose(e, TangleExpr::integer(2))) == (f.is_infinite() ? f : f + Fraction(2)));
  }
}

TEST_CASE("equal slopes give equal colorings") {
  // T(2,3,2) and T(-2,4,2) both have slope 16/7.
  REQUIRE(continued_fraction_value({-2, 4, 2}) == Fraction(16, 7));
  const TangleDiagram a = compile(parse_conway("T(2,3,2)"));
  const TangleDiagram b = compile(parse_conway("T(-2,4,2)"));
  for (int p : {3, 5, 7, 11}) {
    CHECK(boundary_image(a, p) == boundary_image(b, p));
  }
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const TangleExpr e = random_rational(rng, 4);
    const Fraction f = slope(e);
    const TangleDiagram d = compile(e);
    const TangleDiagram ref = f.is_infinite() ? infinity_tangle() : compile(TangleExpr::rational(continued_fraction_terms(f)));
    for (int p : {3, 5}) CHECK(reduced_boundary_image(d, p) == reduced_boundary_image(ref, p));
  }
}

TEST_CASE("crossing count and subtrees") {
  const TangleExpr e = parse_conway("(T(2,3)*r(-4))");
  CHECK(crossing_count(e) == 9);
  CHECK(compile(e).crossings().size() == 9);
  CHECK(to_string(subtree(e, {1, 0})) == "-4");
  CHECK(to_string(replace_subtree(e, {1, 0}, TangleExpr::integer(1))) == "(T(2,3)*r(1))");
  CHECK(format_path({1, 0}) == "1.0");
  CHECK(format_path({}) == "root");
  CHECK(parse_path("1.0") == std::vector<int>{1, 0});
  CHECK_THROWS_AS(subtree(e, {0, 0}), InputError);
}

}  // TEST_SUITE
