#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "tanglelab/coloring.hpp"
#include "tanglelab/errors.hpp"
#include "tanglelab/moves.hpp"
#include "tanglelab/ntangle.hpp"
#include "tanglelab/symplectic.hpp"

using namespace tanglelab;

TEST_SUITE("symplectic") {

TEST_CASE("the form") {
  const SymplecticSpace s = build_form(5, 3);
  CHECK(s.dim == 4);
  CHECK(s.gram[0][1] == 1);
  CHECK(s.gram[1][0] == -1);
  CHECK(s.gram[0][2] == 0);
  CHECK(s.pair({1, 0, 0, 0}, {0, 1, 0, 0}) == 1);
  CHECK(s.pair({0, 1, 0, 0}, {1, 0, 0, 0}) == 4);
  // nondegenerate: the whole space is its own perp only when zero
  CHECK(perp(SubspaceModP::whole(5, 4), s).dim() == 0);
}

TEST_CASE("Lagrangian counts agree with enumeration and the product") {
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}};
  for (auto [p, n] : cases) {
    CAPTURE(p);
    CAPTURE(n);
    const auto all = enumerate_lagrangians(p, n);
    CHECK(BigInt(static_cast<unsigned long>(all.size())) == lagrangian_count(p, n));
    CHECK(all.size() == oracle::isotropic_subspaces(p, 2 * n - 2, n - 1));
    const SymplecticSpace s = build_form(p, n);
    std::set<SubspaceModP> distinct(all.begin(), all.end());
    CHECK(distinct.size() == all.size());
    for (const auto& l : all) {
      CHECK(is_lagrangian(l, s));
      CHECK(perp(l, s) == l);
    }
  }
  CHECK(lagrangian_count(3, 4) == 1120);
  CHECK(lagrangian_count(5, 3) == 156);
  CHECK(lagrangian_count(13, 6) > BigInt(1000000));
  CHECK_THROWS_AS(enumerate_lagrangians(13, 6), BudgetExceeded);
}

TEST_CASE("matching census over F_2") {
  CHECK(perfect_matchings(3).size() == 15);
  CHECK(noncrossing_matchings(3).size() == 5);
  CHECK(noncrossing_matchings(4).size() == 14);
  const std::vector<std::int64_t> expected{3, 15, 105, 945};
  for (int n = 2; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(matching_census(n) == expected[n - 2]);
    CHECK(static_cast<std::uint64_t>(matching_census(n)) == oracle::matching_census(n));
  }
  // every matching image is a Lagrangian of the F_2 space
  const SymplecticSpace s = build_form(2, 4);
  for (const auto& m : perfect_matchings(4)) {
    CHECK(is_lagrangian(reduced_boundary_image(matching_tangle(m), 2), s));
  }
  CHECK(matching_census(4) < lagrangian_count(2, 4));
  CHECK(matching_census(3) == lagrangian_count(2, 3));
}

TEST_CASE("random algebraic tangles have Lagrangian images") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 150; ++i) {
    const int n = 2 + i % 3;
    const int p = std::vector<int>{3, 5, 7}[(i / 3) % 3];
    const NTangleExpr e = random_algebraic_ntangle(n, 2 + i % 5, rng);
    const TangleDiagram d = e.build();
    CAPTURE(e.to_string());
    const SubspaceModP psi = boundary_image(d, p);
    const SubspaceModP hat = reduced_boundary_image(d, p);
    CHECK(psi.dim() == n);
    CHECK(hat.dim() == n - 1);
    CHECK(is_isotropic(hat, build_form(p, n)));
    CHECK(algebraic_boundary_image(e, p) == psi);
  }
}

TEST_CASE("image algebra matches diagrams") {
  const TangleDiagram a = elementary_crossing(3, 0, 1);
  const TangleDiagram b = rotate_diagram(elementary_crossing(3, 1, -1), 2);
  for (int p : {3, 5}) {
    CHECK(rotate_image(boundary_image(b, p), 1) == boundary_image(rotate_diagram(b, 1), p));
    CHECK(compose_images(boundary_image(a, p), boundary_image(b, p)) == boundary_image(compose_diagrams(a, b), p));
  }
}

TEST_CASE("realization of every Lagrangian") {
  const std::vector<std::pair<int, int>> cases{{3, 2}, {5, 2}, {3, 3}, {5, 3}};
  for (auto [p, n] : cases) {
    CAPTURE(p);
    CAPTURE(n);
    const Realization r = realize_lagrangians(p, n);
    CHECK(r.unrealized.empty());
    CHECK(r.witnesses.size() == enumerate_lagrangians(p, n).size());
    for (const auto& [space, w] : r.witnesses) {
      CHECK(reduced_boundary_image(witness_diagram(w), p) == space);
    }
  }
}

TEST_CASE("2-tangle witnesses come from H_p and infinity") {
  for (int p : {3, 5}) {
    const Realization r = realize_lagrangians(p, 2);
    const auto family = h_family(p);
    std::set<std::string> allowed;
    for (const auto& f : family) allowed.insert(f.to_string());
    for (const auto& [space, w] : r.witnesses) {
      CHECK(allowed.count(witness_string(w)) == 1);
    }
  }
}

TEST_CASE("a tiny budget leaves Lagrangians unrealized") {
  const Realization r = realize_lagrangians(3, 3, 3);
  CHECK_FALSE(r.unrealized.empty());
  CHECK(r.witnesses.size() + r.unrealized.size() == 40);
}

}  // TEST_SUITE
