#include <doctest.h>

#include <random>

#include "tanglelab/coloring.hpp"
#include "tanglelab/conway.hpp"
#include "tanglelab/errors.hpp"

using namespace tanglelab;

namespace {

int cycles(const std::vector<int>& perm) {
  std::vector<char> seen(perm.size(), 0);
  int c = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
  }
  return c;
}

}  // namespace

TEST_SUITE("tangle") {

TEST_CASE("braid parsing") {
  const BraidWord w = parse_braid("3: 1 -2 1");
  CHECK(w.strands == 3);
  CHECK(w.letters == std::vector<int>{1, -2, 1});
  CHECK(parse_braid("braid 2: 1 1 1").letters.size() == 3);
  CHECK(parse_braid(w.to_string()).letters == w.letters);
  CHECK(w.power(3).letters.size() == 9);
  CHECK_THROWS_AS(parse_braid("3 1 2"), InputError);
  CHECK_THROWS_AS(parse_braid("2: 2"), InputError);
  CHECK_THROWS_AS(parse_braid("2: x"), InputError);
}

TEST_CASE("closure components match the braid permutation") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const int n = 2 + static_cast<int>(rng() % 4);
    std::vector<int> letters;
    const int len = static_cast<int>(rng() % 8);
    for (int j = 0; j < len; ++j) {
      int l = 1 + static_cast<int>(rng() % (n - 1));
      letters.push_back(rng() % 2 ? l : -l);
    }
    const BraidWord b(n, letters);
    const TangleDiagram d = braid_closure(b);
    CHECK(d.is_link());
    CHECK(d.is_oriented());
    CHECK(components(d).closed_total() == cycles(b.permutation()));
    CHECK(d.crossings().size() == letters.size());
  }
}

TEST_CASE("diagram text round trip") {
  const TangleDiagram d = braid_closure(parse_braid("3: 1 -2 1 -2"));
  CHECK(parse_diagram(format_diagram(d)) == d);
  const TangleDiagram t = compile(parse_conway("T(2,-3,1)"));
  CHECK(parse_diagram(format_diagram(t)) == t);
  const TangleDiagram file = read_diagram_file(std::string(TEST_DATA_DIR) + "/figure_eight.txt");
  CHECK(file == d);
  CHECK_THROWS_AS(parse_diagram("X 0 1"), InputError);
  CHECK_THROWS_AS(parse_diagram("B 0 1 2"), InputError);
  CHECK_THROWS_AS(read_diagram_file("/nonexistent/file"), InputError);
}

TEST_CASE("basic 2-tangles") {
  const auto zero = components(zero_tangle());
  CHECK(zero.partner == std::vector<int>{3, 2, 1, 0});
  const auto inf = components(infinity_tangle());
  CHECK(inf.partner == std::vector<int>{1, 0, 3, 2});
  CHECK(rotate_diagram(zero_tangle()) == infinity_tangle());
  CHECK(components(closure(zero_tangle(), ClosureKind::numerator)).closed_total() == 2);
  CHECK(components(closure(zero_tangle(), ClosureKind::denominator)).closed_total() == 1);
  CHECK(components(unit_twist(1)).partner == std::vector<int>{2, 3, 0, 1});
}

TEST_CASE("rotation by 2n is the identity") {
  for (const char* e : {"T(2,3)", "(r(2)*3)", "inf", "(1*1)"}) {
    const TangleDiagram d = compile(parse_conway(e));
    CHECK(rotate_diagram(d, 4) == d);
    CHECK(rotate_diagram(rotate_diagram(d, 1), 3) == d);
  }
  const TangleDiagram x = elementary_crossing(3, 1, -1);
  CHECK(rotate_diagram(x, 6) == x);
}

TEST_CASE("composition with the identity tangle") {
  for (int n : {1, 2, 3, 4}) {
    const TangleDiagram id = identity_ntangle(n);
    const TangleDiagram x = n > 1 ? elementary_crossing(n, 0, 1) : id;
    const auto a = components(compose_diagrams(id, x));
    const auto b = components(x);
    CHECK(a.partner == b.partner);
    CHECK(tri(compose_diagrams(id, x)) == tri(x));
  }
}

TEST_CASE("matching tangles") {
  const TangleDiagram m = matching_tangle({1, 0, 3, 2, 5, 4});
  CHECK(m.n() == 3);
  CHECK(components(m).partner == std::vector<int>{1, 0, 3, 2, 5, 4});
  CHECK_THROWS_AS(matching_tangle({1, 0, 2}), InputError);
  CHECK_THROWS_AS(matching_tangle({1, 2, 0, 3}), InputError);
}

TEST_CASE("numerator closure determinant is the numerator") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> term(-3, 3);
  for (int i = 0; i < 80; ++i) {
    std::vector<std::int64_t> terms;
    for (int j = 0; j < 3; ++j) {
      int t = term(rng);
      terms.push_back(t == 0 ? 1 : t);
    }
    const Fraction f = continued_fraction_value(terms);
    if (f.is_infinite()) continue;
    const TangleDiagram d = compile(TangleExpr::rational(terms));
    for (int p : {3, 5, 7}) {
      const BigInt n = coloring_space(closure(d, ClosureKind::numerator), p).count;
      const BigInt dd = coloring_space(closure(d, ClosureKind::denominator), p).count;
      CAPTURE(f);
      CHECK(n == (f.num() % p == 0 ? p * p : p));
      CHECK(dd == (f.den() % p == 0 ? p * p : p));
    }
  }
}

TEST_CASE("invalid input") {
  CHECK_THROWS_AS(TangleDiagram({}, {0, 1, 2}), InputError);
  CHECK_THROWS_AS(TangleDiagram({Crossing{0, 1, 2, 3}}, {}), InputError);
  CHECK_THROWS_AS(compose_diagrams(identity_ntangle(2), identity_ntangle(3)), InputError);
  CHECK_THROWS_AS(closure(identity_ntangle(3), ClosureKind::numerator), InputError);
  CHECK_THROWS_AS(join_boundary(zero_tangle(), {{0, 0}}), InputError);
}

}  // TEST_SUITE
