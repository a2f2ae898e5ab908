#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tanglelab/integer_matrix.hpp"
#include "tanglelab/tangle.hpp"

namespace tanglelab {

// Word in a free group: signed 1-based generator indices.
using GroupWord = std::vector<int>;

GroupWord free_reduce(const GroupWord& w);
GroupWord inverse_word(const GroupWord& w);
// Whitespace separated signed integers; '#' starts a comment.
GroupWord parse_group_word(const std::string& text);
std::string format_group_word(const GroupWord& w);

// Element of the free Burnside group B(r, 3) in collected form
//   x_1^a_1 ... x_r^a_r * prod_{i<j} b_ij^beta_ij * prod_{i<j<k} c_ijk^gamma_ijk
// with b_ij = [x_i, x_j] and c_ijk = [b_ij, x_k], exponents in {0, 1, 2}.
class BurnsideElement {
 public:
  static constexpr int kMaxRank = 6;
  static constexpr int kMaxLength = 6 + 15 + 20;

  explicit BurnsideElement(int rank);  // identity
  static BurnsideElement generator(int rank, int index);  // 0-based
  // Trit vector in the order a, beta (pairs lexicographic), gamma.
  static BurnsideElement from_exponents(int rank, const std::vector<int>& exponents);

  int rank() const noexcept { return rank_; }
  int length() const noexcept;
  std::vector<int> exponents() const;
  std::vector<int> abelian_part() const;  // a
  bool is_identity() const;

  // In-place right multiplication by x_k (0-based).
  void right_multiply_generator(int k);

  std::uint64_t index() const;  // base-3 rank of the exponent vector; rank <= 5
  static BurnsideElement from_index(int rank, std::uint64_t index);

  std::string to_string() const;

  friend bool operator==(const BurnsideElement&, const BurnsideElement&) = default;

 private:
  std::uint8_t& pair(int i, int j) { return e_[rank_ + pair_offset(i, j)]; }
  std::uint8_t& triple(int i, int j, int k) { return e_[rank_ + rank_ * (rank_ - 1) / 2 + triple_offset(i, j, k)]; }
  int pair_offset(int i, int j) const;
  int triple_offset(int i, int j, int k) const;

  int rank_;
  std::array<std::uint8_t, kMaxLength> e_{};

  friend BurnsideElement multiply(const BurnsideElement& g, const BurnsideElement& h);
};

BurnsideElement multiply(const BurnsideElement& g, const BurnsideElement& h);
BurnsideElement inverse(const BurnsideElement& g);
BurnsideElement commutator(const BurnsideElement& g, const BurnsideElement& h);  // g^-1 h^-1 g h

BurnsideElement evaluate_word(int rank, const GroupWord& w);

// 3^(r + C(r,2) + C(r,3))
BigInt burnside_order(int r);
// Breadth-first closure from the generators; the count is compared with
// burnside_order and a mismatch throws CrossCheckFailure. r <= 4.
std::uint64_t enumerate_group(int r);

struct ConsistencyReport {
  int rank = 0;
  std::uint64_t associativity_checks = 0;
  std::uint64_t exponent_checks = 0;
  std::uint64_t engel_checks = 0;
  bool exhaustive = false;
};

// Associativity (exhaustive for r <= 2), exponent 3, the 2-Engel law and
// centrality of the c-part on `samples` random instances. Throws
// CrossCheckFailure on the first failure.
ConsistencyReport consistency_check(int r, std::uint64_t samples = 100000, std::uint64_t seed = 1);

// Element budget for group closures; TANGLELAB_MEM_GUARD overrides it.
std::uint64_t memory_guard_elements();

// |B(r,3)| / |normal closure of the relators|.
std::uint64_t quotient_order(int r, const std::vector<BurnsideElement>& relators);

struct CorePresentation {
  int generators = 0;
  std::vector<GroupWord> relators;
};

// Free group strand words of the braid closure, one relator w_j x_j^-1 per
// strand, on n generators. Throws BudgetExceeded when a strand word exceeds
// max_word_length.
CorePresentation strand_presentation(const BraidWord& braid, std::size_t max_word_length = 1u << 22);
// The same with the generator of strand `kill` (default: the last) set to the
// identity and the rest renumbered: n-1 generators.
CorePresentation core_presentation(const BraidWord& braid, int kill = -1,
                                   std::size_t max_word_length = 1u << 22);

enum class Verdict { obstructed, inconclusive };
std::string verdict_string(Verdict v);

struct ObstructionReport {
  Verdict verdict = Verdict::inconclusive;
  int rank = 0;
  int killed = 0;
  std::vector<BurnsideElement> relator_images;
  BigInt tri;
  int components = 0;
  bool words_checked = false;  // free words evaluated and compared too
};

// Relator images in B(n-1, 3), computed by carrying the strand elements
// through the braid and, when the strand words stay short, by evaluating the
// free relators as a second route. kill defaults to the last strand.
ObstructionReport obstruction(const BraidWord& braid, int kill = -1);

// The element P = u w t u^-1 w^-1 t^-1, u = x y^-1 z t^-1, w = x^-1 y z^-1 t.
GroupWord chen_word_p();
BraidWord chen_braid();

}  // namespace tanglelab
