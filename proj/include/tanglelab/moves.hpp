#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tanglelab/coloring.hpp"
#include "tanglelab/conway.hpp"
#include "tanglelab/fraction.hpp"

namespace tanglelab {

// An (m, q)-move is the rational (mq + 1)/q-move.
Fraction mq_to_fraction(std::int64_t m, std::int64_t q);

// p/(p - q) and p/(-(p + q)), checked against
//   p/(p-q) = 1 + 1/(-1 + p/q)  and  p/(-(p+q)) = -1 + 1/(1 + p/q).
std::pair<Fraction, Fraction> fraction_shift_identities(std::int64_t p, std::int64_t q);

// Integers in [(1-p)/2, (p-1)/2] followed by infinity.
std::vector<Fraction> h_family(int p);
// The member of h_family(p) congruent to f as a point of P^1(F_p).
Fraction h_representative(const Fraction& f, int p);

enum class Connectivity { zero, infinity, cross };  // NW-NE, NW-SW, NW-SE

struct BoundaryInvariant {
  Residue p = 0;
  // Normalized projective point: [a : 1] or [1 : 0].
  Residue a = 0;
  Residue b = 1;
  Connectivity connectivity = Connectivity::zero;
  int circles = 0;

  bool is_infinite() const { return b == 0; }
  // The member of H_p with this point.
  Fraction target() const;
  std::string point_string() const;  // "[a:b]" with a in the symmetric range
  friend bool operator==(const BoundaryInvariant&, const BoundaryInvariant&) = default;
};

// Evaluated from the expression by the gluing rules Integer(k) -> [k : 1],
// inf -> [1 : 0], rotation [a : b] -> [-b : a], composition adds fractions.
// The result is compared with the compiled diagram's reduced boundary image,
// strand connectivity and closed component count; any mismatch throws
// CrossCheckFailure.
BoundaryInvariant boundary_invariant(const TangleExpr& e, int p);

// One move in a certificate. The subtree at `path` has slope g with g - f an
// integer, and the move removes the f-tangle from it, leaving Integer(g - f).
// When |s| > 1 the step may carry a realization of the f-tangle's removal by
// moves with s = +-1 on the expansion T(composite_terms).
struct MoveStep {
  Fraction fraction;
  std::vector<int> path;
  std::int64_t s = 1;  // numerator / p
  std::vector<std::int64_t> composite_terms;
  std::vector<MoveStep> composite_steps;
};

struct Certificate {
  TangleExpr start = TangleExpr::integer(0);
  std::vector<MoveStep> steps;
};

// "MOVE p/q AT <path>" per line; composite steps add "VIA T(...)" and list
// their inner moves indented by two spaces.
std::string format_certificate(const Certificate& c);

// Replays every step on exact fractions and returns the final expression.
// Throws CrossCheckFailure if a step is not a legal sp/q-move, changes the
// mod-p invariant, or a composite fails to reduce its tangle to 0.
TangleExpr replay_certificate(const Certificate& c, int p);

struct ReductionResult {
  Fraction target;
  int circles = 0;
  std::optional<Certificate> certificate;
};

// Works up the continued fraction expansion of f from the innermost level,
// turning each level into a member of H_p.
ReductionResult reduce_rational(const Fraction& f, int p);

// Target from the cross-checked boundary invariant; a certificate is attached
// when the expression is rational.
ReductionResult reduce_2algebraic(const TangleExpr& e, int p);

// Random 2-algebraic expression with the given number of integer leaves,
// twist counts in [-max_twist, max_twist].
TangleExpr random_2algebraic(std::mt19937_64& rng, int leaves, int max_twist);

// Two arc segments of a diagram to be replaced by a rational tangle.
struct Site {
  ArcId a = 0;
  ArcId b = 0;
};

// Cuts arcs a and b next to their first recorded end and inserts the tangle
// of slope f with NW on a, NE on the cut piece of a, SW on b and SE on the cut
// piece of b. With f = 0 this gives back the same diagram.
TangleDiagram splice_rational(const TangleDiagram& d, Site site, const Fraction& f);

struct InvarianceReport {
  BigInt count_before;
  BigInt count_after;
  std::optional<SubspaceModP> image_before;
  std::optional<SubspaceModP> image_after;
  bool unchanged() const { return count_before == count_after && image_before == image_after; }
};

// Requires p | numerator(f).
InvarianceReport invariance_harness(const TangleDiagram& d, Site site, const Fraction& f, int p);

}  // namespace tanglelab
