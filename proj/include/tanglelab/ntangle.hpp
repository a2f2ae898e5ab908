#pragma once

#include <memory>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "tanglelab/linear.hpp"
#include "tanglelab/tangle.hpp"

namespace tanglelab {

// Expression trees for n-tangles: crossingless bases, single crossings,
// rotations and horizontal composition.
class NTangleExpr;

namespace nexpr {
struct Matching {
  std::vector<int> partner;
};
struct Twist {
  int n;
  int j;
  int sign;
};
struct Rotate {
  std::shared_ptr<const NTangleExpr> child;
  int steps;
};
struct Compose {
  std::shared_ptr<const NTangleExpr> left;
  std::shared_ptr<const NTangleExpr> right;
};
}  // namespace nexpr

class NTangleExpr {
 public:
  using Node = std::variant<nexpr::Matching, nexpr::Twist, nexpr::Rotate, nexpr::Compose>;

  static NTangleExpr matching(std::vector<int> partner);
  static NTangleExpr twist(int n, int j, int sign);
  static NTangleExpr rotate(const NTangleExpr& child, int steps);
  static NTangleExpr compose(const NTangleExpr& left, const NTangleExpr& right);

  const Node& node() const noexcept { return node_; }
  int n() const noexcept { return n_; }

  TangleDiagram build() const;
  // M[1 0 3 2], X(j,+), r2(...), (A*B)
  std::string to_string() const;

 private:
  NTangleExpr(Node node, int n) : node_(std::move(node)), n_(n) {}
  Node node_;
  int n_;
};

// All perfect matchings of 2n points, as partner arrays.
std::vector<std::vector<int>> perfect_matchings(int n);
// Those with no two chords crossing (Catalan many).
std::vector<std::vector<int>> noncrossing_matchings(int n);

// Random algebraic n-tangle: leaves are noncrossing matchings or single
// crossings, internal nodes are rotate(A, i) * rotate(B, j).
NTangleExpr random_algebraic_ntangle(int n, int leaves, std::mt19937_64& rng);

// Boundary image computed from the expression alone: colorings of a
// composite are pairs of colorings agreeing along the glued points.
SubspaceModP algebraic_boundary_image(const NTangleExpr& e, Residue p);

// The same gluing rule on images directly.
SubspaceModP rotate_image(const SubspaceModP& image, int steps);
SubspaceModP compose_images(const SubspaceModP& a, const SubspaceModP& b);

}  // namespace tanglelab
