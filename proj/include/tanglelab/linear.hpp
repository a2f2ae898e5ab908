#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace tanglelab {

// Trial division; the moduli used here are small.
bool is_prime(std::uint64_t n);
// Throws InputError unless p is prime.
void require_prime(std::uint64_t p);

using Residue = std::uint32_t;
using VectorModP = std::vector<Residue>;

Residue inverse_mod(Residue a, Residue p);

// Dense matrix over F_p, entries kept in [0, p).
class MatrixModP {
 public:
  MatrixModP(Residue p, int rows, int cols);
  // Reduces arbitrary integer entries mod p.
  static MatrixModP from_integers(Residue p, const std::vector<std::vector<std::int64_t>>& rows,
                                  int cols);

  Residue p() const noexcept { return p_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Residue& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Residue at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Residue> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  void set(int r, int c, std::int64_t value);

  // In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref();
  VectorModP apply(std::span<const Residue> v) const;

 private:
  Residue p_;
  int rows_;
  int cols_;
  std::vector<Residue> data_;
};

// Subspace of F_p^d stored by its reduced row echelon basis. The
// representation is canonical: equal subspaces compare equal.
class SubspaceModP {
 public:
  SubspaceModP(Residue p, int ambient_dim);  // zero subspace
  static SubspaceModP span(Residue p, int ambient_dim, const std::vector<VectorModP>& vectors);
  static SubspaceModP whole(Residue p, int ambient_dim);

  Residue p() const noexcept { return p_; }
  int ambient_dim() const noexcept { return ambient_; }
  int dim() const noexcept { return static_cast<int>(basis_.size()); }
  const std::vector<VectorModP>& basis() const noexcept { return basis_; }
  const std::vector<int>& pivots() const noexcept { return pivots_; }

  bool contains(std::span<const Residue> v) const;
  bool contains(const SubspaceModP& other) const;
  SubspaceModP sum(const SubspaceModP& other) const;
  // Image under coordinate restriction to the given columns (in that order).
  SubspaceModP restrict_to(const std::vector<int>& columns) const;
  // Every vector of the subspace, in lexicographic order of coefficients.
  std::vector<VectorModP> elements() const;

  std::string to_string() const;

  friend bool operator==(const SubspaceModP&, const SubspaceModP&) = default;
  friend std::strong_ordering operator<=>(const SubspaceModP& a, const SubspaceModP& b);

 private:
  Residue p_;
  int ambient_;
  std::vector<VectorModP> basis_;
  std::vector<int> pivots_;
};

SubspaceModP rref_mod_p(const MatrixModP& m);    // row space
SubspaceModP kernel_mod_p(const MatrixModP& m);  // right null space

}  // namespace tanglelab
