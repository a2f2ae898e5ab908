#include "tanglelab/ntangle.hpp"

#include <sstream>

#include "tanglelab/coloring.hpp"
#include "tanglelab/errors.hpp"

namespace tanglelab {

NTangleExpr NTangleExpr::matching(std::vector<int> partner) {
  const int m = static_cast<int>(partner.size());
  if (m == 0 || m % 2 != 0) throw InputError("matching needs an even positive number of points");
  for (int i = 0; i < m; ++i) {
    const int j = partner[i];
    if (j < 0 || j >= m || j == i || partner[j] != i) throw InputError("not a perfect matching");
  }
  return NTangleExpr(nexpr::Matching{std::move(partner)}, m / 2);
}

NTangleExpr NTangleExpr::twist(int n, int j, int sign) {
  if (n < 2 || j < 0 || j + 1 >= n || (sign != 1 && sign != -1)) throw InputError("invalid twist");
  return NTangleExpr(nexpr::Twist{n, j, sign}, n);
}

NTangleExpr NTangleExpr::rotate(const NTangleExpr& child, int steps) {
  const int m = 2 * child.n();
  steps = ((steps % m) + m) % m;
  return NTangleExpr(nexpr::Rotate{std::make_shared<const NTangleExpr>(child), steps}, child.n());
}

NTangleExpr NTangleExpr::compose(const NTangleExpr& left, const NTangleExpr& right) {
  if (left.n() != right.n()) throw InputError("composition needs equal n");
  return NTangleExpr(nexpr::Compose{std::make_shared<const NTangleExpr>(left),
                                    std::make_shared<const NTangleExpr>(right)},
                     left.n());
}

TangleDiagram NTangleExpr::build() const {
  struct Visitor {
    TangleDiagram operator()(const nexpr::Matching& m) const { return matching_tangle(m.partner); }
    TangleDiagram operator()(const nexpr::Twist& t) const { return elementary_crossing(t.n, t.j, t.sign); }
    TangleDiagram operator()(const nexpr::Rotate& r) const {
      return rotate_diagram(r.child->build(), r.steps);
    }
    TangleDiagram operator()(const nexpr::Compose& c) const {
      return compose_diagrams(c.left->build(), c.right->build());
    }
  };
  return std::visit(Visitor{}, node_);
}

std::string NTangleExpr::to_string() const {
  struct Visitor {
    std::string operator()(const nexpr::Matching& m) const {
      std::ostringstream os;
      os << "M[";
      for (std::size_t i = 0; i < m.partner.size(); ++i) os << (i ? " " : "") << m.partner[i];
      os << "]";
      return os.str();
    }
    std::string operator()(const nexpr::Twist& t) const {
      return "X" + std::to_string(t.n) + "(" + std::to_string(t.j) + "," + (t.sign > 0 ? "+" : "-") + ")";
    }
    std::string operator()(const nexpr::Rotate& r) const {
      return "r" + std::to_string(r.steps) + "(" + r.child->to_string() + ")";
    }
    std::string operator()(const nexpr::Compose& c) const {
      return "(" + c.left->to_string() + "*" + c.right->to_string() + ")";
    }
  };
  return std::visit(Visitor{}, node_);
}

namespace {

void matchings_rec(std::vector<int>& partner, bool noncrossing, std::vector<std::vector<int>>& out) {
  const int m = static_cast<int>(partner.size());
  int i = 0;
  while (i < m && partner[i] >= 0) ++i;
  if (i == m) {
    out.push_back(partner);
    return;
  }
  for (int j = i + 1; j < m; ++j) {
    if (partner[j] >= 0) continue;
    // A chord (i, j) is noncrossing iff the points strictly between can be
    // matched among themselves, which needs an even gap.
    if (noncrossing && (j - i - 1) % 2 != 0) continue;
    if (noncrossing) {
      bool blocked = false;
      for (int k = i + 1; k < j; ++k) {
        if (partner[k] >= 0 && (partner[k] < i || partner[k] > j)) blocked = true;
      }
      if (blocked) continue;
    }
    partner[i] = j;
    partner[j] = i;
    matchings_rec(partner, noncrossing, out);
    partner[i] = partner[j] = -1;
  }
}

std::vector<std::vector<int>> matchings(int n, bool noncrossing) {
  if (n < 1 || n > 8) throw InputError("matching enumeration needs 1 <= n <= 8");
  std::vector<int> partner(2 * n, -1);
  std::vector<std::vector<int>> out;
  matchings_rec(partner, noncrossing, out);
  return out;
}

NTangleExpr random_leaf(int n, const std::vector<std::vector<int>>& bases, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  if (coin(rng) == 0) {
    std::uniform_int_distribution<std::size_t> pick(0, bases.size() - 1);
    return NTangleExpr::matching(bases[pick(rng)]);
  }
  std::uniform_int_distribution<int> pos(0, n - 2);
  return NTangleExpr::twist(n, pos(rng), coin(rng) ? 1 : -1);
}

}  // namespace

std::vector<std::vector<int>> perfect_matchings(int n) { return matchings(n, false); }
std::vector<std::vector<int>> noncrossing_matchings(int n) { return matchings(n, true); }

NTangleExpr random_algebraic_ntangle(int n, int leaves, std::mt19937_64& rng) {
  if (n < 2) throw InputError("algebraic n-tangles need n >= 2");
  if (leaves < 1) throw InputError("need at least one leaf");
  const auto bases = noncrossing_matchings(n);
  std::uniform_int_distribution<int> rot(0, 2 * n - 1);
  NTangleExpr acc = random_leaf(n, bases, rng);
  for (int i = 1; i < leaves; ++i) {
    NTangleExpr leaf = random_leaf(n, bases, rng);
    // Attach the new piece on either side.
    if (rng() % 2 == 0) {
      acc = NTangleExpr::compose(NTangleExpr::rotate(acc, rot(rng)), NTangleExpr::rotate(leaf, rot(rng)));
    } else {
      acc = NTangleExpr::compose(NTangleExpr::rotate(leaf, rot(rng)), NTangleExpr::rotate(acc, rot(rng)));
    }
  }
  return acc;
}

SubspaceModP rotate_image(const SubspaceModP& image, int steps) {
  const int m = image.ambient_dim();
  steps = ((steps % m) + m) % m;
  std::vector<VectorModP> rows;
  for (const auto& v : image.basis()) {
    VectorModP w(m);
    for (int i = 0; i < m; ++i) w[(i + steps) % m] = v[i];
    rows.push_back(std::move(w));
  }
  return SubspaceModP::span(image.p(), m, rows);
}

SubspaceModP compose_images(const SubspaceModP& a, const SubspaceModP& b) {
  if (a.p() != b.p() || a.ambient_dim() != b.ambient_dim() || a.ambient_dim() % 2 != 0) {
    throw InputError("images must live in the same F_p^{2n}");
  }
  const Residue p = a.p();
  const int n = a.ambient_dim() / 2;
  const int ka = a.dim(), kb = b.dim();
  MatrixModP glue(p, n, ka + kb);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < ka; ++k) glue.at(i, k) = a.basis()[k][n + i];
    for (int l = 0; l < kb; ++l) glue.at(i, ka + l) = static_cast<Residue>((p - b.basis()[l][n - 1 - i]) % p);
  }
  const SubspaceModP sols = kernel_mod_p(glue);
  std::vector<VectorModP> rows;
  for (const auto& c : sols.basis()) {
    VectorModP w(2 * n, 0);
    for (int k = 0; k < ka; ++k) {
      for (int i = 0; i < n; ++i) w[i] = static_cast<Residue>((w[i] + std::uint64_t{c[k]} * a.basis()[k][i]) % p);
    }
    for (int l = 0; l < kb; ++l) {
      for (int i = n; i < 2 * n; ++i) {
        w[i] = static_cast<Residue>((w[i] + std::uint64_t{c[ka + l]} * b.basis()[l][i]) % p);
      }
    }
    rows.push_back(std::move(w));
  }
  return SubspaceModP::span(p, 2 * n, rows);
}

SubspaceModP algebraic_boundary_image(const NTangleExpr& e, Residue p) {
  struct Visitor {
    Residue p;
    SubspaceModP operator()(const nexpr::Matching& m) const {
      std::vector<VectorModP> rows;
      const int size = static_cast<int>(m.partner.size());
      for (int i = 0; i < size; ++i) {
        if (m.partner[i] < i) continue;
        VectorModP v(size, 0);
        v[i] = v[m.partner[i]] = 1;
        rows.push_back(std::move(v));
      }
      return SubspaceModP::span(p, size, rows);
    }
    SubspaceModP operator()(const nexpr::Twist& t) const {
      return boundary_image(elementary_crossing(t.n, t.j, t.sign), static_cast<int>(p));
    }
    SubspaceModP operator()(const nexpr::Rotate& r) const {
      return rotate_image(algebraic_boundary_image(*r.child, p), r.steps);
    }
    SubspaceModP operator()(const nexpr::Compose& c) const {
      return compose_images(algebraic_boundary_image(*c.left, p), algebraic_boundary_image(*c.right, p));
    }
  };
  return std::visit(Visitor{p}, e.node());
}

}  // namespace tanglelab
