#include "tanglelab/moves.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "tanglelab/errors.hpp"
#include "union_find.hpp"

namespace tanglelab {

Fraction mq_to_fraction(std::int64_t m, std::int64_t q) {
  if (q == 0) throw InputError("q must be nonzero");
  return Fraction(checked_add(checked_mul(m, q), 1), q);
}

std::pair<Fraction, Fraction> fraction_shift_identities(std::int64_t p, std::int64_t q) {
  if (q == 0 || std::gcd(p, q) != 1) throw InputError("p and q must be coprime with q != 0");
  const Fraction pq(p, q);
  const Fraction first(p, checked_add(p, -q));
  const Fraction second(p, checked_mul(checked_add(p, q), -1));
  if (first != Fraction(1) + (Fraction(-1) + pq).reciprocal() ||
      second != Fraction(-1) + (Fraction(1) + pq).reciprocal()) {
    throw CrossCheckFailure("fraction shift identity failed");
  }
  return {first, second};
}

namespace {

std::int64_t symmetric(std::int64_t r, std::int64_t p) {
  r = mod_floor(r, p);
  return r > p / 2 ? r - p : r;
}

void require_odd_prime(int p) {
  if (p < 3) throw InputError("p must be an odd prime");
  require_prime(static_cast<std::uint64_t>(p));
}

}  // namespace

std::vector<Fraction> h_family(int p) {
  require_odd_prime(p);
  std::vector<Fraction> out;
  for (int k = (1 - p) / 2; k <= (p - 1) / 2; ++k) out.emplace_back(k);
  out.push_back(Fraction::infinity());
  return out;
}

Fraction h_representative(const Fraction& f, int p) {
  require_odd_prime(p);
  if (f.is_infinite() || mod_floor(f.den(), p) == 0) return Fraction::infinity();
  const auto inv = inverse_mod(static_cast<Residue>(mod_floor(f.den(), p)), static_cast<Residue>(p));
  return Fraction(symmetric(static_cast<std::int64_t>(mod_floor(f.num(), p) * inv % p), p));
}

Fraction BoundaryInvariant::target() const {
  if (is_infinite()) return Fraction::infinity();
  return Fraction(symmetric(a, p));
}

std::string BoundaryInvariant::point_string() const {
  if (is_infinite()) return "[1:0]";
  return "[" + std::to_string(symmetric(a, p)) + ":1]";
}

namespace {

struct Point {
  std::int64_t a;
  std::int64_t b;
};

Point normalize(Point x, Residue p) {
  x.a = mod_floor(x.a, p);
  x.b = mod_floor(x.b, p);
  if (x.b == 0) {
    if (x.a == 0) throw CrossCheckFailure("degenerate projective point");
    return {1, 0};
  }
  return {static_cast<std::int64_t>(x.a * inverse_mod(static_cast<Residue>(x.b), p) % p), 1};
}

std::vector<int> partner_of(Connectivity c) {
  switch (c) {
    case Connectivity::zero:
      return {3, 2, 1, 0};
    case Connectivity::infinity:
      return {1, 0, 3, 2};
    case Connectivity::cross:
      break;
  }
  return {2, 3, 0, 1};
}

Connectivity connectivity_of(const std::vector<int>& partner) {
  if (partner[0] == 3) return Connectivity::zero;
  if (partner[0] == 1) return Connectivity::infinity;
  return Connectivity::cross;
}

struct Eval {
  Point point;
  Connectivity conn;
  int circles;
};

Eval evaluate(const TangleExpr& e, Residue p) {
  if (auto x = e.as<expr::Integer>()) {
    const Connectivity c = x->twists == 0     ? Connectivity::zero
                           : x->twists % 2 != 0 ? Connectivity::cross
                                                : Connectivity::zero;
    return {normalize({x->twists, 1}, p), c, 0};
  }
  if (e.as<expr::Infinity>()) return {{1, 0}, Connectivity::infinity, 0};
  if (e.as<expr::Rational>()) return evaluate(expand(e), p);
  if (auto x = e.as<expr::Rot>()) {
    Eval in = evaluate(*x->child, p);
    const Connectivity c = in.conn == Connectivity::zero       ? Connectivity::infinity
                           : in.conn == Connectivity::infinity ? Connectivity::zero
                                                               : Connectivity::cross;
    return {normalize({-in.point.b, in.point.a}, p), c, in.circles};
  }
  const auto& c = *e.as<expr::Compose>();
  const Eval l = evaluate(*c.left, p);
  const Eval r = evaluate(*c.right, p);
  Point sum;
  if (l.point.b == 0 && r.point.b == 0) {
    sum = {1, 0};
  } else {
    sum = normalize({l.point.a * r.point.b + r.point.a * l.point.b, l.point.b * r.point.b}, p);
  }
  const TangleDiagram glued =
      compose_diagrams(matching_tangle(partner_of(l.conn)), matching_tangle(partner_of(r.conn)));
  return {sum, connectivity_of(components(glued).partner), l.circles + r.circles + glued.closed_components()};
}

}  // namespace

BoundaryInvariant boundary_invariant(const TangleExpr& e, int p) {
  require_odd_prime(p);
  const auto pr = static_cast<Residue>(p);
  const Eval ev = evaluate(e, pr);
  BoundaryInvariant out;
  out.p = pr;
  out.a = static_cast<Residue>(ev.point.a);
  out.b = static_cast<Residue>(ev.point.b);
  out.connectivity = ev.conn;
  out.circles = ev.circles;

  const TangleDiagram d = compile(e);
  const SubspaceModP img = reduced_boundary_image(d, p);
  if (img.dim() != 1) throw CrossCheckFailure("reduced boundary image of a 2-tangle is not a line");
  const auto& v = img.basis()[0];
  const Point direct = normalize({-static_cast<std::int64_t>(v[0]), v[1]}, pr);
  const ComponentSummary cs = components(d);
  if (direct.a != ev.point.a || direct.b != ev.point.b) {
    throw CrossCheckFailure("boundary invariant of " + to_string(e) + " disagrees with its colorings");
  }
  if (connectivity_of(cs.partner) != ev.conn || cs.closed_total() != ev.circles) {
    throw CrossCheckFailure("connectivity of " + to_string(e) + " disagrees with its diagram");
  }
  return out;
}

namespace {

std::vector<int> level_path(std::size_t levels_above) {
  std::vector<int> path;
  for (std::size_t i = 0; i < levels_above; ++i) {
    path.push_back(1);
    path.push_back(0);
  }
  return path;
}

std::optional<std::vector<MoveStep>> unit_realization(const Fraction& f, int p, std::vector<std::int64_t>& terms);

// p/1 moves taking an integer-slope subtree into H_p.
void integer_steps(TangleExpr& e, const std::vector<int>& path, std::int64_t value, int p,
                   std::vector<MoveStep>& steps) {
  const std::int64_t h = symmetric(value, p);
  while (value != h) {
    const std::int64_t f = value > h ? p : -p;
    steps.push_back(MoveStep{Fraction(f), path, f / p, {}, {}});
    value -= f;
    e = replace_subtree(e, path, TangleExpr::integer(value));
  }
}

// Reduces every level of a rational expansion tree with m levels. With
// require_unit_s, gives up (nullopt) on any step needing |s| > 1.
std::optional<std::vector<MoveStep>> run_levels(TangleExpr& e, std::size_t m, int p, bool require_unit_s) {
  std::vector<MoveStep> steps;
  for (std::size_t j = 1; j <= m; ++j) {
    const std::vector<int> path = level_path(m - j);
    Fraction g = slope(subtree(e, path));
    if (g.is_infinite()) continue;
    if (g.is_integer()) {
      integer_steps(e, path, g.num(), p, steps);
      continue;
    }
    // Bring the twist leaf of this level into H_p first so that s stays small.
    std::vector<int> leaf_path = path;
    leaf_path.push_back(0);
    const TangleExpr leaf_expr = subtree(e, leaf_path);
    if (auto leaf = leaf_expr.as<expr::Integer>()) {
      integer_steps(e, leaf_path, leaf->twists, p, steps);
      g = slope(subtree(e, path));
    }
    if (mod_floor(g.den(), p) == 0) throw CrossCheckFailure("level denominator divisible by p");
    const std::int64_t h = h_representative(g, p).num();
    const Fraction f = g + Fraction(-h);
    MoveStep step{f, path, f.num() / p, {}, {}};
    if (std::llabs(step.s) != 1) {
      if (require_unit_s) return std::nullopt;
      std::vector<std::int64_t> terms;
      if (auto inner = unit_realization(f, p, terms)) {
        step.composite_terms = std::move(terms);
        step.composite_steps = std::move(*inner);
      }
    }
    steps.push_back(std::move(step));
    e = replace_subtree(e, path, TangleExpr::integer(h));
  }
  return steps;
}

// Continued fraction expansions of x with a floor or ceiling choice at every
// Euclid step, innermost term first.
void expansions(const Fraction& x, std::vector<std::int64_t>& outer_first, std::size_t max_len,
                std::vector<std::vector<std::int64_t>>& out) {
  if (outer_first.size() >= max_len) return;
  if (x.is_integer()) {
    outer_first.push_back(x.num());
    out.emplace_back(outer_first.rbegin(), outer_first.rend());
    outer_first.pop_back();
    return;
  }
  const std::int64_t fl = (x.num() - mod_floor(x.num(), x.den())) / x.den();
  for (std::int64_t a : {fl, fl + 1}) {
    outer_first.push_back(a);
    expansions((x + Fraction(-a)).reciprocal(), outer_first, max_len, out);
    outer_first.pop_back();
  }
}

std::optional<std::vector<MoveStep>> unit_realization(const Fraction& f, int p, std::vector<std::int64_t>& terms) {
  std::vector<std::vector<std::int64_t>> candidates;
  std::vector<std::int64_t> scratch;
  expansions(f, scratch, 10, candidates);
  for (const auto& t : candidates) {
    TangleExpr e = expand_rational(t);
    auto steps = run_levels(e, t.size(), p, true);
    if (steps && slope(e) == Fraction(0)) {
      terms = t;
      return steps;
    }
  }
  return std::nullopt;
}

void format_steps(const std::vector<MoveStep>& steps, const std::string& indent, std::ostringstream& os) {
  for (const auto& s : steps) {
    os << indent << "MOVE " << s.fraction.to_string() << " AT " << format_path(s.path);
    if (!s.composite_terms.empty()) {
      os << " VIA " << to_string(TangleExpr::rational(s.composite_terms)) << "\n";
      format_steps(s.composite_steps, indent + "  ", os);
    } else {
      os << "\n";
    }
  }
}

TangleExpr replay_steps(TangleExpr e, const std::vector<MoveStep>& steps, int p, bool require_unit_s) {
  BoundaryInvariant inv = boundary_invariant(e, p);
  for (const auto& s : steps) {
    const std::string where = s.fraction.to_string() + " at " + format_path(s.path);
    if (s.fraction.is_infinite() || mod_floor(s.fraction.num(), p) != 0 || s.fraction.num() / p != s.s) {
      throw CrossCheckFailure("move " + where + " is not an sp/q-move");
    }
    if (require_unit_s && std::llabs(s.s) != 1) throw CrossCheckFailure("move " + where + " has |s| != 1");
    const Fraction g = slope(subtree(e, s.path));
    const Fraction rest = g + (-s.fraction);
    if (rest.is_infinite() || !rest.is_integer()) {
      throw CrossCheckFailure("move " + where + " does not fit the subtree of slope " + g.to_string());
    }
    if (!s.composite_terms.empty()) {
      const TangleExpr inner = TangleExpr::rational(s.composite_terms);
      if (slope(inner) != s.fraction) throw CrossCheckFailure("composite expansion has the wrong slope");
      const TangleExpr done = replay_steps(expand(inner), s.composite_steps, p, true);
      if (slope(done) != Fraction(0)) throw CrossCheckFailure("composite does not reduce to 0");
    }
    e = replace_subtree(e, s.path, TangleExpr::integer(rest.num()));
    const BoundaryInvariant after = boundary_invariant(e, p);
    if (after.a != inv.a || after.b != inv.b) throw CrossCheckFailure("move " + where + " changed the invariant");
    inv = after;
  }
  return e;
}

}  // namespace

std::string format_certificate(const Certificate& c) {
  std::ostringstream os;
  format_steps(c.steps, "", os);
  return os.str();
}

TangleExpr replay_certificate(const Certificate& c, int p) {
  require_odd_prime(p);
  return replay_steps(c.start, c.steps, p, false);
}

ReductionResult reduce_rational(const Fraction& f, int p) {
  require_odd_prime(p);
  ReductionResult out;
  out.target = h_representative(f, p);
  Certificate cert;
  if (f.is_infinite()) {
    cert.start = TangleExpr::infinity();
    out.certificate = std::move(cert);
    return out;
  }
  const auto terms = continued_fraction_terms(f);
  cert.start = expand_rational(terms);
  TangleExpr e = cert.start;
  cert.steps = *run_levels(e, terms.size(), p, false);
  if (slope(e) != out.target) throw CrossCheckFailure("reduction of " + f.to_string() + " missed its target");
  out.certificate = std::move(cert);
  return out;
}

ReductionResult reduce_2algebraic(const TangleExpr& e, int p) {
  const BoundaryInvariant inv = boundary_invariant(e, p);
  ReductionResult out;
  out.target = inv.target();
  out.circles = inv.circles;
  if (is_rational(e)) {
    const ReductionResult r = reduce_rational(slope(e), p);
    if (r.target != out.target) throw CrossCheckFailure("slope and boundary invariant disagree");
    out.certificate = r.certificate;
  }
  return out;
}

TangleExpr random_2algebraic(std::mt19937_64& rng, int leaves, int max_twist) {
  if (leaves < 1 || max_twist < 0) throw InputError("invalid random expression parameters");
  std::uniform_int_distribution<int> twist(-max_twist, max_twist);
  std::uniform_int_distribution<int> coin(0, 3);
  if (leaves == 1) {
    TangleExpr leaf = coin(rng) == 0 ? TangleExpr::infinity() : TangleExpr::integer(twist(rng));
    return coin(rng) == 0 ? TangleExpr::rot(leaf) : leaf;
  }
  std::uniform_int_distribution<int> split(1, leaves - 1);
  const int left = split(rng);
  TangleExpr out = TangleExpr::compose(random_2algebraic(rng, left, max_twist),
                                       random_2algebraic(rng, leaves - left, max_twist));
  return coin(rng) == 0 ? TangleExpr::rot(out) : out;
}

namespace {

// Replaces the first end reference of arc a (crossing under slots in order,
// then boundary points) by `fresh`.
void cut_first_end(std::vector<Crossing>& crossings, std::vector<ArcId>& boundary, ArcId a, ArcId fresh) {
  for (auto& c : crossings) {
    if (c.under_in == a) {
      c.under_in = fresh;
      return;
    }
    if (c.under_out == a) {
      c.under_out = fresh;
      return;
    }
  }
  for (auto& b : boundary) {
    if (b == a) {
      b = fresh;
      return;
    }
  }
}

}  // namespace

TangleDiagram splice_rational(const TangleDiagram& d, Site site, const Fraction& f) {
  const int arcs = d.arc_count();
  if (site.a < 0 || site.b < 0 || site.a >= arcs || site.b >= arcs || site.a == site.b) {
    throw InputError("a site needs two distinct arcs of the diagram");
  }
  std::vector<Crossing> crossings = d.crossings();
  std::vector<ArcId> boundary = d.boundary();
  const ArcId cut_a = arcs, cut_b = arcs + 1;
  cut_first_end(crossings, boundary, site.a, cut_a);
  cut_first_end(crossings, boundary, site.b, cut_b);

  const TangleDiagram t = compile(f.is_infinite() ? TangleExpr::infinity() : TangleExpr::rational(continued_fraction_terms(f)));
  const int offset = arcs + 2;
  const int total = offset + t.arc_count();
  for (Crossing c : t.crossings()) {
    c.over += offset;
    c.under_in += offset;
    c.under_out += offset;
    crossings.push_back(c);
  }
  detail::UnionFind uf(total);
  uf.unite(t.boundary()[0] + offset, site.a);
  uf.unite(t.boundary()[3] + offset, cut_a);
  uf.unite(t.boundary()[1] + offset, site.b);
  uf.unite(t.boundary()[2] + offset, cut_b);

  std::vector<char> referenced(total, 0);
  for (auto& c : crossings) {
    c.over = uf.find(c.over);
    c.under_in = uf.find(c.under_in);
    c.under_out = uf.find(c.under_out);
    referenced[c.over] = referenced[c.under_in] = referenced[c.under_out] = 1;
  }
  for (auto& b : boundary) {
    b = uf.find(b);
    referenced[b] = 1;
  }
  int closed = d.closed_components() + t.closed_components();
  for (int x = 0; x < total; ++x) {
    if (uf.find(x) == x && !referenced[x]) ++closed;
  }
  return TangleDiagram(std::move(crossings), std::move(boundary), closed);
}

InvarianceReport invariance_harness(const TangleDiagram& d, Site site, const Fraction& f, int p) {
  require_prime(static_cast<std::uint64_t>(p));
  if (f.is_infinite() || mod_floor(f.num(), p) != 0) throw InputError("move fraction must have numerator divisible by p");
  const TangleDiagram after = splice_rational(d, site, f);
  InvarianceReport r;
  r.count_before = coloring_space(d, p).count;
  r.count_after = coloring_space(after, p).count;
  if (d.n() >= 2) {
    r.image_before = reduced_boundary_image(d, p);
    r.image_after = reduced_boundary_image(after, p);
  }
  return r;
}

}  // namespace tanglelab
