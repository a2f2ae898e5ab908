#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "tanglelab/conway.hpp"
#include "tanglelab/integer_matrix.hpp"
#include "tanglelab/linear.hpp"
#include "tanglelab/ntangle.hpp"

namespace tanglelab {

// The reduced boundary space F_p^{2n-2} with the form phi-hat in the basis
// f_1..f_{2n-2}: <f_i, f_{i+1}> = 1, <f_{i+1}, f_i> = -1, zero otherwise.
struct SymplecticSpace {
  Residue p = 0;
  int n = 0;
  int dim = 0;
  std::vector<std::vector<std::int64_t>> gram;

  Residue pair(const VectorModP& u, const VectorModP& v) const;
};

SymplecticSpace build_form(int p, int n);

bool is_isotropic(const SubspaceModP& s, const SymplecticSpace& space);
bool is_lagrangian(const SubspaceModP& s, const SymplecticSpace& space);
// Orthogonal complement of s under the form.
SubspaceModP perp(const SubspaceModP& s, const SymplecticSpace& space);

// prod_{i=1}^{n-1} (p^i + 1)
BigInt lagrangian_count(int p, int n);

// All Lagrangians, sorted by canonical form. Throws BudgetExceeded when the
// count exceeds 10^6.
std::vector<SubspaceModP> enumerate_lagrangians(int p, int n);

// Number of distinct reduced boundary images over F_2 among all perfect
// matchings of 2n points (crossings are invisible to 2-colorings).
std::int64_t matching_census(int n);

// 2-tangle witnesses are Conway expressions, larger ones n-tangle trees.
using Witness = std::variant<TangleExpr, NTangleExpr>;
std::string witness_string(const Witness& w);
TangleDiagram witness_diagram(const Witness& w);

struct Realization {
  std::map<SubspaceModP, Witness> witnesses;
  std::vector<SubspaceModP> unrealized;
  std::int64_t candidates_tried = 0;
};

constexpr std::int64_t kDefaultRealizationBudget = 200000;

// Search for tangles whose reduced boundary image is each Lagrangian.
// n = 2: integers 0, 1, -1, 2, -2, ..., then infinity, then continued
// fraction vectors by length. n >= 3: rational n-tangles (a noncrossing
// base twisted at adjacent boundary points) by breadth-first search on their
// boundary images, then seeded random algebraic trees. Every witness is
// compiled to a diagram and its image recomputed before it is accepted.
Realization realize_lagrangians(int p, int n, std::int64_t budget = kDefaultRealizationBudget,
                                std::uint64_t seed = 1);

}  // namespace tanglelab
