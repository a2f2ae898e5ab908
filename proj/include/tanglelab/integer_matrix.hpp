#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace tanglelab {

using BigInt = mpz_class;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<BigInt>>& rows, int cols);
  static IntMatrix from_rows(const std::vector<std::vector<long>>& rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  BigInt& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::vector<BigInt> row(int r) const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  // row[dst] += factor * row[src]
  void add_row_multiple(int dst, int src, const BigInt& factor);
  void add_col_multiple(int dst, int src, const BigInt& factor);
  void negate_row(int r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::string to_string() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

// U * A * V = diag(d1, d2, ...) with d1 | d2 | ... and U, V unimodular.
struct SNFResult {
  std::vector<BigInt> factors;  // length min(rows, cols); zeros trail
  IntMatrix U;
  IntMatrix V;
  IntMatrix V_inverse;
  int rank = 0;
};

// Pivot rule: the smallest nonzero |entry| of the remaining block, scanning
// rows first then columns. The product U*A*V and the divisibility chain are
// recomputed before returning; a mismatch throws CrossCheckFailure.
SNFResult snf(const IntMatrix& a);

// Basis (as rows) of the integer right kernel {x : A x = 0}.
std::vector<std::vector<BigInt>> integer_kernel(const IntMatrix& a);

// Index [L : L'] where L is spanned by the rows of `ambient` and L' by the
// rows of `sub`. nullopt means the index is infinite (rank L' < rank L).
// Throws InputError when L' is not contained in L.
std::optional<BigInt> lattice_index(const IntMatrix& sub, const IntMatrix& ambient);

// Rows forming a basis of the saturation (L' tensor Q) intersected with Z^m.
IntMatrix saturation_basis(const IntMatrix& generators);

}  // namespace tanglelab
