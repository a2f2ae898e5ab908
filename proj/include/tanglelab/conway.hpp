#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "tanglelab/fraction.hpp"
#include "tanglelab/tangle.hpp"

namespace tanglelab {

class TangleExpr;

namespace expr {
struct Integer {
  std::int64_t twists;
};
struct Infinity {};
// Counterclockwise quarter turn.
struct Rot {
  std::shared_ptr<const TangleExpr> child;
};
// Horizontal composition (left * right).
struct Compose {
  std::shared_ptr<const TangleExpr> left, right;
};
// T(a1, ..., am): the rational tangle with slope am + 1/(a(m-1) + ... + 1/a1).
struct Rational {
  std::vector<std::int64_t> terms;
};
}  // namespace expr

// Conway algebraic expression for 2-tangles. Immutable; subtrees are shared.
class TangleExpr {
 public:
  using Node = std::variant<expr::Integer, expr::Infinity, expr::Rot, expr::Compose, expr::Rational>;

  static TangleExpr integer(std::int64_t k);
  static TangleExpr infinity();
  static TangleExpr rot(const TangleExpr& child);
  static TangleExpr compose(const TangleExpr& left, const TangleExpr& right);
  static TangleExpr rational(std::vector<std::int64_t> terms);

  const Node& node() const noexcept { return node_; }
  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(&node_);
  }

  // Rot has child 0, Compose has children 0 and 1; leaves and Rational
  // nodes have none.
  int child_count() const noexcept;
  const TangleExpr& child(int index) const;

  friend bool operator==(const TangleExpr& a, const TangleExpr& b);

 private:
  explicit TangleExpr(Node node) : node_(std::move(node)) {}
  Node node_;
};

// expr := INT | "inf" | "r(" expr ")" | "(" expr "*" expr ")" | "T(" INT ("," INT)* ")"
// Whitespace between tokens is ignored.
TangleExpr parse_conway(const std::string& text);
std::string to_string(const TangleExpr& e);

TangleExpr rotate(const TangleExpr& e);
TangleExpr compose(const TangleExpr& a, const TangleExpr& b);

// Rewrites T(a1..am) nodes into Integer/Rot/Compose trees:
//   V1 = a1, N1 = -a1, Vj = (aj * r(N(j-1))), Nj = (-aj * r(V(j-1))).
// Vj has slope aj + 1/V(j-1); Nj has the negated slope.
TangleExpr expand(const TangleExpr& e);
TangleExpr expand_rational(const std::vector<std::int64_t>& terms);

TangleDiagram compile(const TangleExpr& e);

// Slope of a rational expression. Rational nodes, Integer and Infinity leaves,
// rotations of rational expressions and compositions of a rational expression
// with an Integer leaf are rational; anything else throws NotRational.
Fraction slope(const TangleExpr& e);
bool is_rational(const TangleExpr& e);

// Exact continued fraction value am + 1/(a(m-1) + ... + 1/a1).
Fraction continued_fraction_value(const std::vector<std::int64_t>& terms);
// Terms (a1, ..., am) with continued_fraction_value(terms) == f; integer f
// gives a single term. Throws for infinity.
std::vector<std::int64_t> continued_fraction_terms(const Fraction& f);

// Paths address subtrees: "" is the root, "1.0" is child 0 of child 1.
TangleExpr subtree(const TangleExpr& root, const std::vector<int>& path);
TangleExpr replace_subtree(const TangleExpr& root, const std::vector<int>& path,
                           const TangleExpr& replacement);
std::string format_path(const std::vector<int>& path);
std::vector<int> parse_path(const std::string& text);

// Total number of crossings = sum of |k| over Integer leaves (after expansion).
std::int64_t crossing_count(const TangleExpr& e);

}  // namespace tanglelab
