#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tanglelab/burnside.hpp"

namespace tanglelab {

struct Presentation {
  int generators = 0;
  std::vector<GroupWord> relators;  // freely and cyclically reduced
};

// Generators sigma_1..sigma_{n-1}; commutation and braid relators, then
// sigma_i^k for every i.
Presentation braid_presentation(int n, int k);
// "gens <n>" then one relator per line; '#' comments.
Presentation parse_presentation(const std::string& text);
Presentation read_presentation_file(const std::string& path);

enum class Strategy { felsch, hlt };

// Right action of the group on the cosets of the trivial subgroup. Columns
// are x1, x1^-1, x2, x2^-1, ...; cosets are numbered in shortlex order of
// their shortest representative words, coset 0 being the identity.
class CosetTable {
 public:
  CosetTable(int generators, std::vector<int> entries);

  int generators() const noexcept { return generators_; }
  int size() const noexcept { return static_cast<int>(entries_.size()) / (2 * generators_); }
  int act(int coset, int letter) const;
  int trace(int coset, const GroupWord& w) const;
  // Shortlex-least word reaching each coset from coset 0.
  const std::vector<GroupWord>& words() const noexcept { return words_; }

 private:
  int generators_;
  std::vector<int> entries_;
  std::vector<GroupWord> words_;
};

// Throws BudgetExceeded when more than max_cosets rows are needed at once.
CosetTable enumerate(const Presentation& pres, std::size_t max_cosets = 1000000,
                     Strategy strategy = Strategy::felsch);

// Every generator column is a permutation and every relator fixes every row.
bool verify_table(const CosetTable& table, const Presentation& pres);

bool word_equal(const CosetTable& table, const GroupWord& w1, const GroupWord& w2);
bool word_equal(const Presentation& pres, const GroupWord& w1, const GroupWord& w2,
                std::size_t max_cosets = 1000000);

struct ConjugacyClasses {
  std::vector<int> class_of;                 // element -> class id
  std::vector<std::vector<int>> members;     // class id -> elements, ascending
  std::vector<GroupWord> representatives;    // shortlex-least word per class
  int count() const { return static_cast<int>(members.size()); }
};

// Classes are numbered by their least element.
ConjugacyClasses conjugacy_classes(const CosetTable& table);

}  // namespace tanglelab
