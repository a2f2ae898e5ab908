#pragma once

// Brute-force reference computations. Nothing here calls into the linear
// algebra of the library; everything is enumeration over small cases.

#include <array>
#include <cstdint>
#include <functional>
#include <set>
#include <vector>

#include "tanglelab/tangle.hpp"

namespace oracle {

using tanglelab::TangleDiagram;

// Visits every assignment in [0, k)^n.
inline void for_each_assignment(int n, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> x(n, 0);
  while (true) {
    f(x);
    int i = 0;
    while (i < n && ++x[i] == k) x[i++] = 0;
    if (i == n) return;
  }
}

inline std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

inline int mod(std::int64_t a, int k) { return static_cast<int>(((a % k) + k) % k); }

inline bool fox_ok(const TangleDiagram& d, const std::vector<int>& x, int k) {
  for (const auto& c : d.crossings()) {
    if (mod(2 * x[c.over] - x[c.under_in] - x[c.under_out], k) != 0) return false;
  }
  return true;
}

// Fox k-colorings; free circles contribute a factor k each.
inline std::uint64_t fox_count(const TangleDiagram& d, int k) {
  std::uint64_t n = 0;
  for_each_assignment(d.arc_count(), k, [&](const std::vector<int>& x) { n += fox_ok(d, x, k); });
  return n * ipow(k, d.closed_components());
}

// c = (1 - t) a + t b; b enters from the right of the over strand, which is
// the incoming under arc at a positive crossing and the outgoing at a negative.
inline std::uint64_t abf_count(const TangleDiagram& d, int p, int t) {
  std::uint64_t n = 0;
  for_each_assignment(d.arc_count(), p, [&](const std::vector<int>& x) {
    for (const auto& c : d.crossings()) {
      const bool pos = c.sign.value_or(1) > 0;
      const int b = pos ? x[c.under_in] : x[c.under_out];
      const int cc = pos ? x[c.under_out] : x[c.under_in];
      if (mod(static_cast<std::int64_t>(1 - t) * x[c.over] + static_cast<std::int64_t>(t) * b - cc, p) != 0) return;
    }
    ++n;
  });
  return n * ipow(p, d.closed_components());
}

// All boundary restrictions of Fox p-colorings.
inline std::set<std::vector<int>> boundary_colorings(const TangleDiagram& d, int p) {
  std::set<std::vector<int>> out;
  for_each_assignment(d.arc_count(), p, [&](const std::vector<int>& x) {
    if (!fox_ok(d, x, p)) return;
    std::vector<int> b;
    for (auto a : d.boundary()) b.push_back(x[a]);
    out.insert(b);
  });
  return out;
}

// Standard form phi(u, v) = sum u_i v_{i+1} - u_{i+1} v_i over F_p.
inline int form(const std::vector<int>& u, const std::vector<int>& v, int p) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return mod(s, p);
}

// Counts k-dimensional isotropic subspaces of F_p^d by walking every reduced
// row echelon matrix with k rows.
inline std::uint64_t isotropic_subspaces(int p, int d, int k) {
  std::uint64_t count = 0;
  std::vector<int> pivots(k);
  std::function<void(int, int)> choose = [&](int row, int from) {
    if (row == k) {
      // free positions: (r, c) with c > pivot[r] and c not a pivot
      std::vector<std::pair<int, int>> free;
      for (int r = 0; r < k; ++r) {
        for (int c = pivots[r] + 1; c < d; ++c) {
          bool is_pivot = false;
          for (int q : pivots) is_pivot = is_pivot || q == c;
          if (!is_pivot) free.emplace_back(r, c);
        }
      }
      for_each_assignment(static_cast<int>(free.size()), p, [&](const std::vector<int>& x) {
        std::vector<std::vector<int>> rows(k, std::vector<int>(d, 0));
        for (int r = 0; r < k; ++r) rows[r][pivots[r]] = 1;
        for (std::size_t i = 0; i < free.size(); ++i) rows[free[i].first][free[i].second] = x[i];
        for (int a = 0; a < k; ++a) {
          for (int b = a + 1; b < k; ++b) {
            if (form(rows[a], rows[b], p) != 0) return;
          }
        }
        ++count;
      });
      return;
    }
    for (int c = from; c < d; ++c) {
      pivots[row] = c;
      choose(row + 1, c + 1);
    }
  };
  choose(0, 0);
  return count;
}

// Distinct sets of F_2 boundary colorings of perfect matchings of 2n points,
// taken modulo the all-ones vector. A matching colors each chord with one
// color, so its boundary colorings are the vectors constant on chords.
inline std::uint64_t matching_census(int n) {
  std::set<std::set<std::vector<int>>> images;
  std::vector<int> partner(2 * n, -1);
  std::function<void()> rec = [&]() {
    int i = 0;
    while (i < 2 * n && partner[i] >= 0) ++i;
    if (i == 2 * n) {
      std::set<std::vector<int>> img;
      for_each_assignment(n, 2, [&](const std::vector<int>& chord) {
        std::vector<int> v(2 * n), w(2 * n);
        int id = 0;
        std::vector<int> label(2 * n, -1);
        for (int a = 0; a < 2 * n; ++a) {
          if (label[a] < 0) label[a] = label[partner[a]] = id++;
        }
        for (int a = 0; a < 2 * n; ++a) {
          v[a] = chord[label[a]];
          w[a] = 1 - v[a];
        }
        img.insert(std::min(v, w));
      });
      images.insert(img);
      return;
    }
    for (int j = i + 1; j < 2 * n; ++j) {
      if (partner[j] >= 0) continue;
      partner[i] = j;
      partner[j] = i;
      rec();
      partner[i] = partner[j] = -1;
    }
  };
  rec();
  return images.size();
}

// The Heisenberg group over F_3 is a faithful model of B(2, 3):
// x = [[1,1,0],[0,1,0],[0,0,1]], y = [[1,0,0],[0,1,1],[0,0,1]].
// Elements are (a, b, c) for the matrix [[1,a,c],[0,1,b],[0,0,1]].
using Heis = std::array<int, 3>;

inline Heis heis_mul(const Heis& g, const Heis& h) {
  return {mod(g[0] + h[0], 3), mod(g[1] + h[1], 3), mod(g[2] + h[2] + g[0] * h[1], 3)};
}

inline Heis heis_word(const std::vector<int>& w) {
  Heis g{0, 0, 0};
  for (int l : w) {
    Heis s{0, 0, 0};
    const int e = l > 0 ? 1 : 2;  // inverse = square in exponent 3
    for (int i = 0; i < e; ++i) s = heis_mul(s, std::abs(l) == 1 ? Heis{1, 0, 0} : Heis{0, 1, 0});
    g = heis_mul(g, s);
  }
  return g;
}

// 2x2 matrices over F_m; used for small matrix images of braid groups.
using Mat2 = std::array<int, 4>;

inline Mat2 mat_mul(const Mat2& a, const Mat2& b, int m) {
  return {mod(a[0] * b[0] + a[1] * b[2], m), mod(a[0] * b[1] + a[1] * b[3], m),
          mod(a[2] * b[0] + a[3] * b[2], m), mod(a[2] * b[1] + a[3] * b[3], m)};
}

// Order of the group generated by the given matrices.
inline std::size_t generated_order(const std::vector<Mat2>& gens, int m) {
  std::set<Mat2> seen{{1, 0, 0, 1}};
  std::vector<Mat2> frontier{{1, 0, 0, 1}};
  while (!frontier.empty()) {
    std::vector<Mat2> next;
    for (const auto& g : frontier) {
      for (const auto& s : gens) {
        const Mat2 h = mat_mul(g, s, m);
        if (seen.insert(h).second) next.push_back(h);
      }
    }
    frontier = std::move(next);
  }
  return seen.size();
}

}  // namespace oracle
