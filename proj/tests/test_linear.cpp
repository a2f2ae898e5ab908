#include <doctest.h>

#include <cmath>
#include <functional>
#include <random>

#include "tanglelab/errors.hpp"
#include "tanglelab/integer_matrix.hpp"
#include "tanglelab/linear.hpp"

using namespace tanglelab;

namespace {

BigInt det(const std::vector<std::vector<BigInt>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  BigInt d = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t j = 0; j < n; ++j) {
        if (j != c) row.push_back(m[r][j]);
      }
      minor.push_back(row);
    }
    d += (c % 2 ? -1 : 1) * m[0][c] * det(minor);
  }
  return d;
}

// gcd of all k x k minors.
BigInt determinantal_divisor(const IntMatrix& a, int k) {
  BigInt g = 0;
  std::vector<int> rows, cols;
  std::function<void(int)> pick_cols;
  std::function<void(int)> pick_rows = [&](int from) {
    if (static_cast<int>(rows.size()) == k) {
      pick_cols(0);
      return;
    }
    for (int r = from; r < a.rows(); ++r) {
      rows.push_back(r);
      pick_rows(r + 1);
      rows.pop_back();
    }
  };
  pick_cols = [&](int from) {
    if (static_cast<int>(cols.size()) == k) {
      std::vector<std::vector<BigInt>> m;
      for (int r : rows) {
        std::vector<BigInt> row;
        for (int c : cols) row.push_back(a.at(r, c));
        m.push_back(row);
      }
      const BigInt d = det(m);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (int c = from; c < a.cols(); ++c) {
      cols.push_back(c);
      pick_cols(c + 1);
      cols.pop_back();
    }
  };
  pick_rows(0);
  return g;
}

IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int range) {
  IntMatrix m(rows, cols);
  std::uniform_int_distribution<int> v(-range, range);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m.at(r, c) = v(rng);
  }
  return m;
}

}  // namespace

TEST_SUITE("linear") {

TEST_CASE("primality and inverses") {
  CHECK(is_prime(2));
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK_THROWS_AS(require_prime(9), InputError);
  for (Residue a = 1; a < 13; ++a) CHECK((a * inverse_mod(a, 13)) % 13 == 1);
}

TEST_CASE("Smith normal form against determinantal divisors") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 150; ++i) {
    const int rows = 1 + static_cast<int>(rng() % 4);
    const int cols = 1 + static_cast<int>(rng() % 4);
    const IntMatrix a = random_matrix(rng, rows, cols, i % 2 ? 3 : 12);
    const SNFResult s = snf(a);
    CHECK(s.U * a * s.V == [&] {
      IntMatrix d(rows, cols);
      for (std::size_t k = 0; k < s.factors.size(); ++k) d.at(static_cast<int>(k), static_cast<int>(k)) = s.factors[k];
      return d;
    }());
    BigInt prev = 1;
    for (int k = 1; k <= std::min(rows, cols); ++k) {
      const BigInt dk = determinantal_divisor(a, k);
      // d_k = D_k / D_{k-1}
      if (prev == 0) {
        CHECK(s.factors[k - 1] == 0);
      } else {
        CHECK(s.factors[k - 1] == dk / prev);
      }
      prev = dk;
    }
  }
}

TEST_CASE("integer kernel and lattice index") {
  const IntMatrix a = IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 1, 1}, {0, 2, 4}}, 3);
  const auto ker = integer_kernel(a);
  REQUIRE(ker.size() == 1);
  CHECK(ker[0] == std::vector<BigInt>{1, -2, 1});
  const IntMatrix sub = IntMatrix::from_rows(std::vector<std::vector<long>>{{0, 5}}, 2);
  const IntMatrix amb = IntMatrix::from_rows(std::vector<std::vector<long>>{{0, 1}}, 2);
  CHECK(lattice_index(sub, amb) == BigInt(5));
  CHECK(saturation_basis(sub) == amb);
  const IntMatrix two = IntMatrix::identity(2);
  CHECK_FALSE(lattice_index(sub, two).has_value());
  const IntMatrix outside = IntMatrix::from_rows(std::vector<std::vector<long>>{{1, 1}}, 2);
  CHECK_THROWS_AS(lattice_index(outside, amb), InputError);
}

TEST_CASE("subspaces are canonical") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const Residue p = i % 2 ? 3 : 5;
    std::vector<VectorModP> vs;
    for (int j = 0; j < 3; ++j) {
      VectorModP v(5);
      for (auto& x : v) x = static_cast<Residue>(rng() % p);
      vs.push_back(v);
    }
    const SubspaceModP s = SubspaceModP::span(p, 5, vs);
    std::vector<VectorModP> shuffled{vs[2], vs[0], vs[1]};
    for (std::size_t k = 0; k < 5; ++k) shuffled[0][k] = (shuffled[0][k] + 2 * shuffled[1][k]) % p;
    CHECK(SubspaceModP::span(p, 5, shuffled) == s);
    for (const auto& v : vs) CHECK(s.contains(v));
    CHECK(s.elements().size() == static_cast<std::size_t>(std::pow(p, s.dim())));
  }
}

TEST_CASE("rank plus nullity") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    const int rows = 1 + static_cast<int>(rng() % 5), cols = 1 + static_cast<int>(rng() % 5);
    std::vector<std::vector<std::int64_t>> m(rows, std::vector<std::int64_t>(cols));
    for (auto& r : m) {
      for (auto& x : r) x = static_cast<std::int64_t>(rng() % 7) - 3;
    }
    const MatrixModP a = MatrixModP::from_integers(7, m, cols);
    const SubspaceModP row = rref_mod_p(a);
    const SubspaceModP ker = kernel_mod_p(a);
    CHECK(row.dim() + ker.dim() == cols);
    for (const auto& v : ker.basis()) {
      for (Residue x : a.apply(v)) CHECK(x == 0);
    }
  }
}

}  // TEST_SUITE
