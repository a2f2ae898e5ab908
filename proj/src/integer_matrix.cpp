#include "tanglelab/integer_matrix.hpp"

#include <sstream>

#include "tanglelab/errors.hpp"

namespace tanglelab {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InputError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * cols, BigInt(0));
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<BigInt>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw InputError("ragged matrix");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw InputError("ragged matrix");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<BigInt> IntMatrix::row(int r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r) * cols_,
          data_.begin() + static_cast<std::ptrdiff_t>(r + 1) * cols_};
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, a), at(r, b));
}

void IntMatrix::add_row_multiple(int dst, int src, const BigInt& factor) {
  if (factor == 0) return;
  for (int c = 0; c < cols_; ++c) {
    if (at(src, c) != 0) at(dst, c) += factor * at(src, c);
  }
}

void IntMatrix::add_col_multiple(int dst, int src, const BigInt& factor) {
  if (factor == 0) return;
  for (int r = 0; r < rows_; ++r) {
    if (at(r, src) != 0) at(r, dst) += factor * at(r, src);
  }
}

void IntMatrix::negate_row(int r) {
  for (int c = 0; c < cols_; ++c) at(r, c) = -at(r, c);
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw InputError("matrix product dimension mismatch");
  IntMatrix out(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a.at(i, k);
      if (x == 0) continue;
      for (int j = 0; j < b.cols_; ++j) out.at(i, j) += x * b.at(k, j);
    }
  }
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    os << "[";
    for (int c = 0; c < cols_; ++c) os << (c ? " " : "") << at(r, c).get_str();
    os << "]\n";
  }
  return os.str();
}

namespace {

struct Work {
  IntMatrix D, U, V, Vinv;

  void swap_rows(int a, int b) {
    D.swap_rows(a, b);
    U.swap_rows(a, b);
  }
  void swap_cols(int a, int b) {
    D.swap_cols(a, b);
    V.swap_cols(a, b);
    Vinv.swap_rows(a, b);
  }
  void add_row(int dst, int src, const BigInt& f) {
    D.add_row_multiple(dst, src, f);
    U.add_row_multiple(dst, src, f);
  }
  void add_col(int dst, int src, const BigInt& f) {
    D.add_col_multiple(dst, src, f);
    V.add_col_multiple(dst, src, f);
    Vinv.add_row_multiple(src, dst, -f);
  }

  // Smallest nonzero |entry| in the block [t.., t..], first in row-major order.
  bool select_pivot(int t) {
    int best_r = -1, best_c = -1;
    BigInt best;
    for (int r = t; r < D.rows(); ++r) {
      for (int c = t; c < D.cols(); ++c) {
        const BigInt& x = D.at(r, c);
        if (x == 0) continue;
        if (best_r < 0 || abs(x) < best) {
          best = abs(x);
          best_r = r;
          best_c = c;
        }
      }
    }
    if (best_r < 0) return false;
    swap_rows(t, best_r);
    swap_cols(t, best_c);
    return true;
  }
};

}  // namespace

SNFResult snf(const IntMatrix& a) {
  Work w{a, IntMatrix::identity(a.rows()), IntMatrix::identity(a.cols()),
         IntMatrix::identity(a.cols())};
  const int limit = std::min(a.rows(), a.cols());
  int t = 0;
  for (; t < limit; ++t) {
    if (!w.select_pivot(t)) break;
    while (true) {
      bool clean = true;
      for (int i = t + 1; i < a.rows(); ++i) {
        if (w.D.at(i, t) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), w.D.at(i, t).get_mpz_t(), w.D.at(t, t).get_mpz_t());
        w.add_row(i, t, -q);
        if (w.D.at(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < a.cols(); ++j) {
        if (w.D.at(t, j) == 0) continue;
        BigInt q;
        mpz_tdiv_q(q.get_mpz_t(), w.D.at(t, j).get_mpz_t(), w.D.at(t, t).get_mpz_t());
        w.add_col(j, t, -q);
        if (w.D.at(t, j) != 0) clean = false;
      }
      if (!clean) {
        w.select_pivot(t);
        continue;
      }
      int bad_row = -1;
      for (int i = t + 1; i < a.rows() && bad_row < 0; ++i) {
        for (int j = t + 1; j < a.cols(); ++j) {
          if (w.D.at(i, j) % w.D.at(t, t) != 0) {
            bad_row = i;
            break;
          }
        }
      }
      if (bad_row < 0) break;
      w.add_row(t, bad_row, 1);
    }
    if (w.D.at(t, t) < 0) {
      w.D.negate_row(t);
      w.U.negate_row(t);
    }
  }

  SNFResult res;
  res.rank = t;
  for (int i = 0; i < limit; ++i) res.factors.push_back(w.D.at(i, i));
  // Verification: U*A*V must equal the diagonal, with d_i | d_{i+1}.
  IntMatrix check = w.U * a * w.V;
  for (int r = 0; r < a.rows(); ++r) {
    for (int c = 0; c < a.cols(); ++c) {
      const BigInt expect = (r == c) ? res.factors[r] : BigInt(0);
      if (check.at(r, c) != expect) throw CrossCheckFailure("SNF verification failed: U*A*V is not diagonal");
    }
  }
  for (int i = 0; i + 1 < limit; ++i) {
    if (res.factors[i] < 0) throw CrossCheckFailure("SNF factor negative");
    if (res.factors[i] == 0) {
      if (res.factors[i + 1] != 0) throw CrossCheckFailure("SNF zero factor before nonzero");
    } else if (res.factors[i + 1] % res.factors[i] != 0) {
      throw CrossCheckFailure("SNF divisibility chain broken");
    }
  }
  if (!(w.V * w.Vinv == IntMatrix::identity(a.cols()))) {
    throw CrossCheckFailure("SNF column transform inverse mismatch");
  }
  res.U = std::move(w.U);
  res.V = std::move(w.V);
  res.V_inverse = std::move(w.Vinv);
  return res;
}

std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a) {
  const SNFResult s = snf(a);
  std::vector<std::vector<BigInt>> basis;
  for (int j = s.rank; j < a.cols(); ++j) {
    std::vector<BigInt> v(a.cols());
    for (int i = 0; i < a.cols(); ++i) v[i] = s.V.at(i, j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<BigInt> lattice_index(const IntMatrix& sub, const IntMatrix& ambient) {
  if (sub.cols() != ambient.cols()) throw InputError("lattice dimension mismatch");
  const SNFResult s = snf(ambient);
  const int r = s.rank;
  IntMatrix coords(sub.rows(), r);
  for (int k = 0; k < sub.rows(); ++k) {
    for (int j = 0; j < ambient.cols(); ++j) {
      BigInt wj = 0;
      for (int i = 0; i < ambient.cols(); ++i) wj += sub.at(k, i) * s.V.at(i, j);
      if (j >= r) {
        if (wj != 0) throw InputError("sublattice is not contained in the ambient lattice");
        continue;
      }
      if (wj % s.factors[j] != 0) throw InputError("sublattice is not contained in the ambient lattice");
      coords.at(k, j) = wj / s.factors[j];
    }
  }
  if (r == 0) return BigInt(1);
  const SNFResult c = snf(coords);
  if (c.rank < r) return std::nullopt;
  BigInt index = 1;
  for (int i = 0; i < r; ++i) index *= c.factors[i];
  return index;
}

IntMatrix saturation_basis(const IntMatrix& generators) {
  const SNFResult s = snf(generators);
  IntMatrix out(s.rank, generators.cols());
  for (int i = 0; i < s.rank; ++i) {
    for (int c = 0; c < generators.cols(); ++c) out.at(i, c) = s.V_inverse.at(i, c);
  }
  return out;
}

}  // namespace tanglelab
