#include "tanglelab/symplectic.hpp"

#include <deque>
#include <random>
#include <set>

#include "tanglelab/coloring.hpp"
#include "tanglelab/errors.hpp"

namespace tanglelab {

Residue SymplecticSpace::pair(const VectorModP& u, const VectorModP& v) const {
  if (static_cast<int>(u.size()) != dim || static_cast<int>(v.size()) != dim) {
    throw InputError("dimension mismatch");
  }
  std::int64_t acc = 0;
  for (int i = 0; i < dim; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < dim; ++j) {
      if (gram[i][j] != 0) acc = (acc + gram[i][j] * u[i] * static_cast<std::int64_t>(v[j])) % p;
    }
  }
  return static_cast<Residue>((acc % p + p) % p);
}

SymplecticSpace build_form(int p, int n) {
  if (p < 2) throw InputError("modulus must be prime");
  require_prime(static_cast<std::uint64_t>(p));
  if (n < 2) throw InputError("symplectic space needs n >= 2");
  SymplecticSpace s;
  s.p = static_cast<Residue>(p);
  s.n = n;
  s.dim = 2 * n - 2;
  s.gram.assign(s.dim, std::vector<std::int64_t>(s.dim, 0));
  for (int i = 0; i + 1 < s.dim; ++i) {
    s.gram[i][i + 1] = 1;
    s.gram[i + 1][i] = -1;
  }
  return s;
}

bool is_isotropic(const SubspaceModP& s, const SymplecticSpace& space) {
  if (s.ambient_dim() != space.dim || s.p() != space.p) throw InputError("dimension mismatch");
  const auto& b = s.basis();
  for (std::size_t i = 0; i < b.size(); ++i) {
    for (std::size_t j = i + 1; j < b.size(); ++j) {
      if (space.pair(b[i], b[j]) != 0) return false;
    }
  }
  return true;
}

bool is_lagrangian(const SubspaceModP& s, const SymplecticSpace& space) {
  return is_isotropic(s, space) && s.dim() == space.n - 1;
}

SubspaceModP perp(const SubspaceModP& s, const SymplecticSpace& space) {
  if (s.ambient_dim() != space.dim || s.p() != space.p) throw InputError("dimension mismatch");
  // Rows b^T G; the kernel is everything orthogonal to the basis.
  MatrixModP m(space.p, s.dim(), space.dim);
  for (int r = 0; r < s.dim(); ++r) {
    for (int c = 0; c < space.dim; ++c) {
      std::int64_t acc = 0;
      for (int k = 0; k < space.dim; ++k) acc += static_cast<std::int64_t>(s.basis()[r][k]) * space.gram[k][c];
      m.set(r, c, acc);
    }
  }
  return kernel_mod_p(m);
}

BigInt lagrangian_count(int p, int n) {
  if (p < 2) throw InputError("modulus must be prime");
  require_prime(static_cast<std::uint64_t>(p));
  if (n < 2) throw InputError("symplectic space needs n >= 2");
  BigInt out = 1;
  for (int i = 1; i <= n - 1; ++i) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(i));
    out *= term + 1;
  }
  return out;
}

std::vector<SubspaceModP> enumerate_lagrangians(int p, int n) {
  const SymplecticSpace space = build_form(p, n);
  if (lagrangian_count(p, n) > 1000000) throw BudgetExceeded("more than 10^6 Lagrangians");
  std::set<SubspaceModP> level{SubspaceModP(space.p, space.dim)};
  for (int k = 0; k < n - 1; ++k) {
    std::set<SubspaceModP> next;
    for (const auto& w : level) {
      for (const auto& v : perp(w, space).elements()) {
        // One representative per line.
        auto first = std::find_if(v.begin(), v.end(), [](Residue x) { return x != 0; });
        if (first == v.end() || *first != 1 || w.contains(v)) continue;
        next.insert(w.sum(SubspaceModP::span(space.p, space.dim, {v})));
      }
    }
    level = std::move(next);
  }
  std::vector<SubspaceModP> out(level.begin(), level.end());
  if (BigInt(static_cast<unsigned long>(out.size())) != lagrangian_count(p, n)) {
    throw CrossCheckFailure("Lagrangian enumeration disagrees with the product formula");
  }
  return out;
}

std::int64_t matching_census(int n) {
  if (n < 2 || n > 8) throw InputError("matching census needs 2 <= n <= 8");
  std::set<SubspaceModP> images;
  for (const auto& m : perfect_matchings(n)) images.insert(reduced_boundary_image(matching_tangle(m), 2));
  return static_cast<std::int64_t>(images.size());
}

std::string witness_string(const Witness& w) {
  if (const auto* e = std::get_if<TangleExpr>(&w)) return to_string(*e);
  return std::get<NTangleExpr>(w).to_string();
}

TangleDiagram witness_diagram(const Witness& w) {
  if (const auto* e = std::get_if<TangleExpr>(&w)) return compile(*e);
  return std::get<NTangleExpr>(w).build();
}

namespace {

SubspaceModP reduce_image(const SubspaceModP& image) {
  std::vector<VectorModP> rows;
  for (const auto& v : image.basis()) rows.push_back(reduced_coordinates(v, image.p()));
  return SubspaceModP::span(image.p(), image.ambient_dim() - 2, rows);
}

class Collector {
 public:
  Collector(int p, int n, std::int64_t budget) : p_(p), budget_(budget) {
    for (auto& l : enumerate_lagrangians(p, n)) wanted_.insert(std::move(l));
  }

  bool done() const { return out_.witnesses.size() == wanted_.size() || out_.candidates_tried >= budget_; }
  bool complete() const { return out_.witnesses.size() == wanted_.size(); }

  // `image` is the claimed reduced image; confirmed on the diagram.
  void offer(const Witness& w, const SubspaceModP& image) {
    ++out_.candidates_tried;
    if (!wanted_.count(image) || out_.witnesses.count(image)) return;
    if (reduced_boundary_image(witness_diagram(w), p_) != image) {
      throw CrossCheckFailure("witness " + witness_string(w) + " has a different boundary image");
    }
    out_.witnesses.emplace(image, w);
  }

  Realization finish() {
    for (const auto& l : wanted_) {
      if (!out_.witnesses.count(l)) out_.unrealized.push_back(l);
    }
    return std::move(out_);
  }

 private:
  int p_;
  std::int64_t budget_;
  std::set<SubspaceModP> wanted_;
  Realization out_;
};

void offer_expr(Collector& c, const TangleExpr& e, int p) {
  c.offer(e, reduced_boundary_image(compile(e), p));
}

void search_two_tangles(Collector& c, int p) {
  const int h = (p - 1) / 2;
  offer_expr(c, TangleExpr::integer(0), p);
  for (int k = 1; k <= h && !c.done(); ++k) {
    offer_expr(c, TangleExpr::integer(k), p);
    offer_expr(c, TangleExpr::integer(-k), p);
  }
  if (!c.done()) offer_expr(c, TangleExpr::infinity(), p);
  for (int len = 2; len <= 6 && !c.done(); ++len) {
    std::vector<std::int64_t> terms(len, -p);
    while (!c.done()) {
      if (std::find(terms.begin(), terms.end(), 0) == terms.end()) {
        offer_expr(c, TangleExpr::rational(terms), p);
      }
      int i = len - 1;
      while (i >= 0 && ++terms[i] > p) terms[i--] = -p;
      if (i < 0) break;
    }
  }
}

void search_ntangles(Collector& c, int p, int n, std::uint64_t seed) {
  const auto pr = static_cast<Residue>(p);
  std::vector<std::pair<NTangleExpr, SubspaceModP>> twists;
  for (int j = 0; j + 1 < n; ++j) {
    for (int s : {1, -1}) {
      NTangleExpr t = NTangleExpr::twist(n, j, s);
      twists.emplace_back(t, algebraic_boundary_image(t, pr));
    }
  }
  std::map<SubspaceModP, NTangleExpr> seen;
  std::deque<SubspaceModP> queue;
  auto visit = [&](const NTangleExpr& e, const SubspaceModP& image) {
    if (seen.count(image)) return;
    seen.emplace(image, e);
    queue.push_back(image);
    c.offer(e, reduce_image(image));
  };
  for (const auto& m : noncrossing_matchings(n)) {
    NTangleExpr e = NTangleExpr::matching(m);
    visit(e, algebraic_boundary_image(e, pr));
  }
  while (!queue.empty() && !c.done()) {
    const SubspaceModP image = queue.front();
    queue.pop_front();
    const NTangleExpr base = seen.at(image);
    for (int r = 0; r < 2 * n && !c.done(); ++r) {
      const SubspaceModP rotated = rotate_image(image, r);
      for (const auto& [t, timg] : twists) {
        visit(NTangleExpr::compose(NTangleExpr::rotate(base, r), t), compose_images(rotated, timg));
      }
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> leaves(1, 8);
  while (!c.done()) {
    NTangleExpr e = random_algebraic_ntangle(n, leaves(rng), rng);
    c.offer(e, reduce_image(algebraic_boundary_image(e, pr)));
  }
}

}  // namespace

Realization realize_lagrangians(int p, int n, std::int64_t budget, std::uint64_t seed) {
  if (p < 3) throw InputError("realization search needs an odd prime");
  require_prime(static_cast<std::uint64_t>(p));
  if (budget < 1) throw InputError("budget must be positive");
  Collector c(p, n, budget);
  if (n == 2) {
    search_two_tangles(c, p);
  } else {
    search_ntangles(c, p, n, seed);
  }
  return c.finish();
}

}  // namespace tanglelab
