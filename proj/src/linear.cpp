#include "tanglelab/linear.hpp"

#include <algorithm>
#include <sstream>

#include "tanglelab/errors.hpp"

namespace tanglelab {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
}

Residue inverse_mod(Residue a, Residue p) {
  // Extended Euclid on small moduli.
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw InputError("element not invertible");
  return static_cast<Residue>(t < 0 ? t + p : t);
}

MatrixModP::MatrixModP(Residue p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  require_prime(p);
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

MatrixModP MatrixModP::from_integers(Residue p, const std::vector<std::vector<std::int64_t>>& rows,
                                     int cols) {
  MatrixModP m(p, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw InputError("ragged matrix");
    for (int c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void MatrixModP::set(int r, int c, std::int64_t value) {
  std::int64_t v = value % static_cast<std::int64_t>(p_);
  if (v < 0) v += p_;
  at(r, c) = static_cast<Residue>(v);
}

std::vector<int> MatrixModP::rref() {
  std::vector<int> pivots;
  int row = 0;
  const std::uint64_t p = p_;
  for (int col = 0; col < cols_ && row < rows_; ++col) {
    int sel = -1;
    for (int r = row; r < rows_; ++r) {
      if (at(r, col) != 0) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) {
      for (int c = 0; c < cols_; ++c) std::swap(at(sel, c), at(row, c));
    }
    const std::uint64_t inv = inverse_mod(at(row, col), p_);
    for (int c = col; c < cols_; ++c) at(row, c) = static_cast<Residue>(at(row, c) * inv % p);
    for (int r = 0; r < rows_; ++r) {
      if (r == row || at(r, col) == 0) continue;
      const std::uint64_t factor = p - at(r, col);
      for (int c = col; c < cols_; ++c) {
        at(r, c) = static_cast<Residue>((at(r, c) + factor * at(row, c)) % p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

VectorModP MatrixModP::apply(std::span<const Residue> v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("dimension mismatch");
  VectorModP out(rows_, 0);
  for (int r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (int c = 0; c < cols_; ++c) acc = (acc + static_cast<std::uint64_t>(at(r, c)) * v[c]) % p_;
    out[r] = static_cast<Residue>(acc);
  }
  return out;
}

SubspaceModP::SubspaceModP(Residue p, int ambient_dim) : p_(p), ambient_(ambient_dim) {
  require_prime(p);
  if (ambient_dim < 0) throw InputError("negative dimension");
}

SubspaceModP SubspaceModP::span(Residue p, int ambient_dim, const std::vector<VectorModP>& vectors) {
  SubspaceModP s(p, ambient_dim);
  MatrixModP m(p, static_cast<int>(vectors.size()), ambient_dim);
  for (int r = 0; r < m.rows(); ++r) {
    if (static_cast<int>(vectors[r].size()) != ambient_dim) throw InputError("dimension mismatch");
    for (int c = 0; c < ambient_dim; ++c) m.set(r, c, vectors[r][c]);
  }
  s.pivots_ = m.rref();
  for (int r = 0; r < static_cast<int>(s.pivots_.size()); ++r) {
    auto row = m.row(r);
    s.basis_.emplace_back(row.begin(), row.end());
  }
  return s;
}

SubspaceModP SubspaceModP::whole(Residue p, int ambient_dim) {
  std::vector<VectorModP> id(ambient_dim, VectorModP(ambient_dim, 0));
  for (int i = 0; i < ambient_dim; ++i) id[i][i] = 1;
  return span(p, ambient_dim, id);
}

bool SubspaceModP::contains(std::span<const Residue> v) const {
  if (static_cast<int>(v.size()) != ambient_) throw InputError("dimension mismatch");
  VectorModP w(v.begin(), v.end());
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Residue coeff = w[pivots_[i]] % p_;
    if (coeff == 0) continue;
    const std::uint64_t factor = p_ - coeff;
    for (int c = 0; c < ambient_; ++c) w[c] = static_cast<Residue>((w[c] + factor * basis_[i][c]) % p_);
  }
  return std::all_of(w.begin(), w.end(), [&](Residue x) { return x % p_ == 0; });
}

bool SubspaceModP::contains(const SubspaceModP& other) const {
  if (other.p_ != p_ || other.ambient_ != ambient_) throw InputError("subspace mismatch");
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const VectorModP& v) { return contains(v); });
}

SubspaceModP SubspaceModP::sum(const SubspaceModP& other) const {
  if (other.p_ != p_ || other.ambient_ != ambient_) throw InputError("subspace mismatch");
  std::vector<VectorModP> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(p_, ambient_, all);
}

SubspaceModP SubspaceModP::restrict_to(const std::vector<int>& columns) const {
  std::vector<VectorModP> rows;
  for (const auto& b : basis_) {
    VectorModP v;
    for (int c : columns) v.push_back(b.at(c));
    rows.push_back(std::move(v));
  }
  return span(p_, static_cast<int>(columns.size()), rows);
}

std::vector<VectorModP> SubspaceModP::elements() const {
  std::vector<VectorModP> out;
  const int k = dim();
  std::vector<Residue> coeff(k, 0);
  while (true) {
    VectorModP v(ambient_, 0);
    for (int i = 0; i < k; ++i) {
      for (int c = 0; c < ambient_; ++c) {
        v[c] = static_cast<Residue>((v[c] + static_cast<std::uint64_t>(coeff[i]) * basis_[i][c]) % p_);
      }
    }
    out.push_back(std::move(v));
    int i = k - 1;
    while (i >= 0 && ++coeff[i] == p_) coeff[i--] = 0;
    if (i < 0) break;
  }
  return out;
}

std::string SubspaceModP::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (i) os << ", ";
    os << "(";
    for (int c = 0; c < ambient_; ++c) os << (c ? " " : "") << basis_[i][c];
    os << ")";
  }
  os << "]";
  return os.str();
}

std::strong_ordering operator<=>(const SubspaceModP& a, const SubspaceModP& b) {
  if (auto c = a.p_ <=> b.p_; c != 0) return c;
  if (auto c = a.ambient_ <=> b.ambient_; c != 0) return c;
  if (auto c = a.basis_.size() <=> b.basis_.size(); c != 0) return c;
  return a.basis_ <=> b.basis_;
}

SubspaceModP rref_mod_p(const MatrixModP& m) {
  std::vector<VectorModP> rows;
  for (int r = 0; r < m.rows(); ++r) rows.emplace_back(m.row(r).begin(), m.row(r).end());
  return SubspaceModP::span(m.p(), m.cols(), rows);
}

SubspaceModP kernel_mod_p(const MatrixModP& m) {
  MatrixModP work = m;
  const auto pivots = work.rref();
  const Residue p = m.p();
  std::vector<char> is_pivot(m.cols(), 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<VectorModP> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    VectorModP v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      v[pivots[r]] = static_cast<Residue>((p - work.at(static_cast<int>(r), free)) % p);
    }
    basis.push_back(std::move(v));
  }
  return SubspaceModP::span(p, m.cols(), basis);
}

}  // namespace tanglelab
