#include "tanglelab/coloring.hpp"

#include "tanglelab/errors.hpp"

namespace tanglelab {

IntMatrix fox_relation_matrix(const TangleDiagram& d) {
  const int vars = d.arc_count() + d.closed_components();
  IntMatrix m(static_cast<int>(d.crossings().size()), vars);
  for (int r = 0; r < m.rows(); ++r) {
    const Crossing& c = d.crossings()[r];
    m.at(r, c.over) += 2;
    m.at(r, c.under_in) -= 1;
    m.at(r, c.under_out) -= 1;
  }
  return m;
}

namespace {

MatrixModP reduce_mod(const IntMatrix& m, Residue p) {
  MatrixModP out(p, m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      BigInt v;
      mpz_fdiv_r_ui(v.get_mpz_t(), m.at(r, c).get_mpz_t(), p);
      out.at(r, c) = static_cast<Residue>(v.get_ui());
    }
  }
  return out;
}

BigInt power(int base, int exp) {
  BigInt out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  return out;
}

ColoringSpace space_from_matrix(const IntMatrix& rel, int k) {
  ColoringSpace cs;
  cs.modulus = k;
  cs.variables = rel.cols();
  if (is_prime(static_cast<std::uint64_t>(k))) {
    cs.solutions = kernel_mod_p(reduce_mod(rel, static_cast<Residue>(k)));
    cs.count = power(k, cs.solutions->dim());
    return cs;
  }
  const SNFResult s = snf(rel);
  cs.invariant_factors = s.factors;
  cs.count = power(k, rel.cols() - s.rank);
  for (int i = 0; i < s.rank; ++i) {
    BigInt g;
    mpz_gcd_ui(g.get_mpz_t(), s.factors[i].get_mpz_t(), static_cast<unsigned long>(k));
    cs.count *= g;
  }
  return cs;
}

std::vector<int> boundary_columns(const TangleDiagram& d) {
  return {d.boundary().begin(), d.boundary().end()};
}

}  // namespace

ColoringSpace coloring_space(const TangleDiagram& d, int k) {
  if (k < 2) throw InputError("coloring modulus must be at least 2");
  return space_from_matrix(fox_relation_matrix(d), k);
}

BigInt tri(const TangleDiagram& d) { return coloring_space(d, 3).count; }

SubspaceModP boundary_image(const TangleDiagram& d, int p) {
  if (p < 2) throw InputError("modulus must be prime");
  require_prime(static_cast<std::uint64_t>(p));
  if (d.n() < 1) throw InputError("boundary image needs a tangle with boundary points");
  const ColoringSpace cs = coloring_space(d, p);
  return cs.solutions->restrict_to(boundary_columns(d));
}

bool satisfies_alternating(const SubspaceModP& s) {
  const Residue p = s.p();
  for (const auto& v : s.basis()) {
    std::uint64_t acc = 0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += (i % 2 == 0) ? v[i] : (p - v[i]);
    if (acc % p != 0) return false;
  }
  return true;
}

VectorModP reduced_coordinates(const VectorModP& v, Residue p) {
  const std::size_t m = v.size();
  if (m < 4 || m % 2 != 0) throw InputError("reduced coordinates need 2n >= 4 boundary points");
  std::vector<std::uint64_t> a(m - 1);
  a[0] = v[0] % p;
  for (std::size_t k = 1; k + 1 < m; ++k) a[k] = (v[k] + p - a[k - 1]) % p;
  if (a[m - 2] != v[m - 1] % p) throw CrossCheckFailure("boundary vector violates the alternating condition");
  const std::uint64_t last = a[m - 2];
  VectorModP out(m - 2);
  for (std::size_t k = 0; k + 2 < m; ++k) {
    out[k] = static_cast<Residue>(k % 2 == 0 ? (a[k] + p - last) % p : a[k]);
  }
  return out;
}

SubspaceModP reduced_boundary_image(const TangleDiagram& d, int p) {
  if (d.n() < 2) throw InputError("reduced boundary image needs n >= 2");
  const SubspaceModP img = boundary_image(d, p);
  if (!satisfies_alternating(img)) {
    throw CrossCheckFailure("boundary image violates the alternating condition");
  }
  std::vector<VectorModP> rows;
  for (const auto& v : img.basis()) rows.push_back(reduced_coordinates(v, static_cast<Residue>(p)));
  return SubspaceModP::span(static_cast<Residue>(p), 2 * d.n() - 2, rows);
}

namespace {

std::vector<BigInt> reduced_coordinates_z(const std::vector<BigInt>& v) {
  const std::size_t m = v.size();
  std::vector<BigInt> a(m - 1);
  a[0] = v[0];
  for (std::size_t k = 1; k + 1 < m; ++k) a[k] = v[k] - a[k - 1];
  if (a[m - 2] != v[m - 1]) throw CrossCheckFailure("integer boundary vector violates the alternating condition");
  const BigInt last = a[m - 2];
  std::vector<BigInt> out(m - 2);
  for (std::size_t k = 0; k + 2 < m; ++k) out[k] = (k % 2 == 0) ? BigInt(a[k] - last) : a[k];
  return out;
}

}  // namespace

VirtualIndex virtual_index(const TangleDiagram& d) {
  if (d.n() < 2) throw InputError("virtual index needs n >= 2");
  const auto kernel = integer_kernel(fox_relation_matrix(d));
  std::vector<std::vector<BigInt>> rows;
  for (const auto& x : kernel) {
    std::vector<BigInt> bd;
    for (ArcId a : d.boundary()) bd.push_back(x[a]);
    rows.push_back(reduced_coordinates_z(bd));
  }
  VirtualIndex out;
  out.image = IntMatrix::from_rows(rows, 2 * d.n() - 2);
  out.enclosing = saturation_basis(out.image);
  out.index = lattice_index(out.image, out.enclosing);
  return out;
}

ColoringSpace abf_space(const TangleDiagram& d, int p, int t) {
  if (p < 2) throw InputError("modulus must be prime");
  require_prime(static_cast<std::uint64_t>(p));
  const std::int64_t tt = ((t % p) + p) % p;
  if (tt == 0) throw InputError("ABF parameter t must be invertible mod p");
  if (!d.is_oriented()) throw InputError("ABF colorings need crossing signs (use a braid closure)");
  const int vars = d.arc_count() + d.closed_components();
  std::vector<std::vector<std::int64_t>> rows;
  for (const auto& c : d.crossings()) {
    std::vector<std::int64_t> row(vars, 0);
    const ArcId b = *c.sign > 0 ? c.under_in : c.under_out;
    const ArcId out = *c.sign > 0 ? c.under_out : c.under_in;
    row[out] += 1;
    row[c.over] -= 1 - tt;
    row[b] -= tt;
    rows.push_back(std::move(row));
  }
  const MatrixModP m = MatrixModP::from_integers(static_cast<Residue>(p), rows, vars);
  ColoringSpace cs;
  cs.modulus = p;
  cs.variables = vars;
  cs.solutions = kernel_mod_p(m);
  mpz_ui_pow_ui(cs.count.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(cs.solutions->dim()));
  return cs;
}

}  // namespace tanglelab
