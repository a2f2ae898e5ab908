#include <doctest.h>

#include <random>

#include "tanglelab/coloring.hpp"
#include "tanglelab/errors.hpp"
#include "tanglelab/moves.hpp"

using namespace tanglelab;

namespace {

// Point of P^1(F_p) of a slope, normalized as (a, 1) or (1, 0).
std::pair<std::int64_t, std::int64_t> point(const Fraction& f, int p) {
  const std::int64_t den = mod_floor(f.den(), p);
  if (den == 0) return {1, 0};
  const std::int64_t inv = inverse_mod(static_cast<Residue>(den), p);
  return {mod_floor(mod_floor(f.num(), p) * inv, p), 1};
}

void check_certificate_steps(const std::vector<MoveStep>& steps, int p) {
  for (const auto& s : steps) {
    CHECK(mod_floor(s.fraction.num(), p) == 0);
    CHECK(s.fraction.num() == s.s * p);
    if (s.composite_steps.empty()) {
      CHECK((s.s == 1 || s.s == -1));
    } else {
      check_certificate_steps(s.composite_steps, p);
    }
  }
}

}  // namespace

TEST_SUITE("moves") {

TEST_CASE("move fractions") {
  CHECK(mq_to_fraction(2, 3) == Fraction(7, 3));
  CHECK(mq_to_fraction(3, 1) == Fraction(4));
  const auto [a, b] = fraction_shift_identities(5, 2);
  CHECK(a == Fraction(5, 3));
  CHECK(b == Fraction(-5, 7));
  const auto [c, d] = fraction_shift_identities(13, 5);
  CHECK(c == Fraction(13, 8));
  CHECK(d == Fraction(-13, 18));
}

TEST_CASE("the family H_p") {
  CHECK(h_family(3) == std::vector<Fraction>{-1, 0, 1, Fraction::infinity()});
  CHECK(h_family(5).size() == 6);
  CHECK(h_representative(Fraction(16, 7), 3) == Fraction(1));
  CHECK(h_representative(Fraction(16, 7), 5) == Fraction(-2));
  CHECK(h_representative(Fraction(1, 3), 3).is_infinite());
  for (int p : {3, 5, 7, 13}) {
    for (std::int64_t q = 1; q < 12; ++q) {
      for (std::int64_t n = -20; n <= 20; ++n) {
        const Fraction f(n, q);
        CHECK(point(h_representative(f, p), p) == point(f, p));
      }
    }
  }
}

TEST_CASE("reduction of rational tangles") {
  CHECK(reduce_rational(Fraction(16, 7), 3).target == Fraction(1));
  CHECK(reduce_rational(Fraction(16, 7), 5).target == Fraction(-2));
  CHECK(reduce_rational(Fraction(1, 3), 3).target.is_infinite());
  const ReductionResult r = reduce_rational(Fraction(1, 5), 13);
  CHECK(r.target == Fraction(-5));
  REQUIRE(r.certificate);
  CHECK(format_certificate(*r.certificate) ==
        "MOVE 26/5 AT root VIA T(3,1,-2,6)\n"
        "  MOVE 13/3 AT 1.0.1.0\n"
        "  MOVE 13/3 AT 1.0\n"
        "  MOVE 13/2 AT root\n");
  CHECK(to_string(replay_certificate(*r.certificate, 13)) == "-5");
}

TEST_CASE("certificates replay on seeded fractions") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 200; ++i) {
    const int p = std::vector<int>{3, 5, 7, 11, 13}[i % 5];
    const std::int64_t q = 1 + static_cast<std::int64_t>(rng() % 60);
    const std::int64_t n = static_cast<std::int64_t>(rng() % 241) - 120;
    const Fraction f(n, q);
    CAPTURE(f);
    CAPTURE(p);
    const ReductionResult r = reduce_rational(f, p);
    REQUIRE(r.certificate);
    const TangleExpr end = replay_certificate(*r.certificate, p);
    CHECK(slope(end) == r.target);
    CHECK(r.target == h_representative(f, p));
    CHECK(slope(r.certificate->start) == f);
    check_certificate_steps(r.certificate->steps, p);
  }
}

TEST_CASE("a tampered certificate is rejected") {
  ReductionResult r = reduce_rational(Fraction(16, 7), 5);
  REQUIRE(r.certificate);
  REQUIRE_FALSE(r.certificate->steps.empty());
  Certificate bad = *r.certificate;
  bad.steps[0].fraction = Fraction(4, 1);
  CHECK_THROWS_AS(replay_certificate(bad, 5), CrossCheckFailure);
}

TEST_CASE("boundary invariant of algebraic tangles") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 300; ++i) {
    const TangleExpr e = random_2algebraic(rng, 1 + i % 5, 4);
    for (int p : {3, 5, 7}) {
      const BoundaryInvariant inv = boundary_invariant(e, p);
      const ReductionResult r = reduce_2algebraic(e, p);
      CHECK(r.target == inv.target());
      CHECK(r.circles == inv.circles);
      if (is_rational(e)) {
        CHECK(r.certificate.has_value());
        CHECK(inv.target() == h_representative(slope(e), p));
      }
    }
  }
  // two infinity tangles side by side close up a circle
  const BoundaryInvariant two = boundary_invariant(parse_conway("(inf*inf)"), 3);
  CHECK(two.is_infinite());
  CHECK(two.circles == 1);
  CHECK(two.point_string() == "[1:0]");
}

TEST_CASE("splicing the 0 tangle changes nothing") {
  const TangleDiagram trefoil = braid_closure(parse_braid("2: 1 1 1"));
  for (ArcId a = 0; a < trefoil.arc_count(); ++a) {
    for (ArcId b = 0; b < trefoil.arc_count(); ++b) {
      if (a != b) CHECK(splice_rational(trefoil, {a, b}, Fraction(0)) == trefoil);
    }
  }
  CHECK_THROWS_AS(splice_rational(trefoil, {0, 0}, Fraction(3)), InputError);
}

TEST_CASE("p/q-moves preserve p-colorings") {
  const std::vector<TangleDiagram> diagrams{
      braid_closure(parse_braid("2: 1 1 1")),
      braid_closure(parse_braid("3: 1 -2 1 -2")),
      braid_closure(parse_braid("3: 1 -2 1 -2 1 -2")),
      compile(parse_conway("(T(2,3)*r(2))")),
  };
  const std::vector<std::pair<Fraction, int>> moves{{Fraction(3), 3}, {Fraction(5, 2), 5}, {Fraction(13, 5), 13},
                                                     {Fraction(-7, 3), 7}};
  std::mt19937_64 rng(14);
  for (const auto& d : diagrams) {
    std::uniform_int_distribution<ArcId> arc(0, d.arc_count() - 1);
    for (const auto& [f, p] : moves) {
      for (int i = 0; i < 10; ++i) {
        Site s{arc(rng), arc(rng)};
        if (s.a == s.b) continue;
        CHECK(invariance_harness(d, s, f, p).unchanged());
      }
    }
  }
}

TEST_CASE("the harness sees a change when the move is not a p-move") {
  const TangleDiagram trefoil = braid_closure(parse_braid("2: 1 1 1"));
  CHECK_THROWS_AS(invariance_harness(trefoil, {0, 1}, Fraction(2), 3), InputError);
  bool changed = false;
  for (ArcId a = 0; a < 3; ++a) {
    for (ArcId b = 0; b < 3; ++b) {
      if (a != b) changed = changed || tri(splice_rational(trefoil, {a, b}, Fraction(1))) != tri(trefoil);
    }
  }
  CHECK(changed);
}

}  // TEST_SUITE
