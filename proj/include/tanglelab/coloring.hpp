#pragma once

#include <optional>
#include <vector>

#include "tanglelab/integer_matrix.hpp"
#include "tanglelab/linear.hpp"
#include "tanglelab/tangle.hpp"

namespace tanglelab {

// Fox k-colorings: one variable per arc plus one per free circle, and the
// relation 2*over - under_in - under_out = 0 (mod k) at every crossing.
struct ColoringSpace {
  int modulus = 0;
  int variables = 0;  // arcs + free circles
  // Prime modulus: the solution subspace of F_p^variables.
  std::optional<SubspaceModP> solutions;
  // Composite modulus: invariant factors of the integer relation matrix.
  std::vector<BigInt> invariant_factors;
  BigInt count;
};

// Integer relation matrix: rows = crossings, columns = arcs then free circles.
IntMatrix fox_relation_matrix(const TangleDiagram& d);

ColoringSpace coloring_space(const TangleDiagram& d, int k);
BigInt tri(const TangleDiagram& d);

// psi: colorings restricted to the 2n boundary points, as a subspace of
// F_p^{2n} in counterclockwise boundary order.
SubspaceModP boundary_image(const TangleDiagram& d, int p);

// sum_i (-1)^i x_i = 0 for every vector of the subspace.
bool satisfies_alternating(const SubspaceModP& s);

// Coordinates of an alternating boundary vector in the basis
// f_k = e_k + e_{k+1} (k = 1..2n-1), with the monochromatic vector
// f_1 + f_3 + ... + f_{2n-1} used to clear the f_{2n-1} coordinate. Returns
// the first 2n-2 coordinates.
VectorModP reduced_coordinates(const VectorModP& boundary_vector, Residue p);

// psi-hat: boundary image modulo monochromatic colorings, in F_p^{2n-2}.
// Throws CrossCheckFailure if the boundary image violates the alternating
// condition.
SubspaceModP reduced_boundary_image(const TangleDiagram& d, int p);

struct VirtualIndex {
  std::optional<BigInt> index;  // nullopt = infinite
  IntMatrix image;              // generators of the reduced image over Z
  IntMatrix enclosing;          // basis of its saturation
};

// Integer colorings: the reduced boundary image lattice inside Z^{2n-2} and
// its index in the enclosing saturated lattice.
VirtualIndex virtual_index(const TangleDiagram& d);

// Alexander-Burau-Fox colorings over F_p on a diagram whose crossings carry
// signs: c = (1 - t) a + t b, a = over arc, b = under arc entering from the
// right of the over strand, c = the other under arc. For a positive crossing
// b is the incoming under arc, for a negative one the outgoing.
ColoringSpace abf_space(const TangleDiagram& d, int p, int t);

}  // namespace tanglelab
