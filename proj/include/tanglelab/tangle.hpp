#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace tanglelab {

using ArcId = std::int32_t;

struct Crossing {
  ArcId over = 0;
  ArcId under_in = 0;
  ArcId under_out = 0;
  // +1 / -1 when the diagram carries an orientation (braid closures).
  std::optional<int> sign;

  friend bool operator==(const Crossing&, const Crossing&) = default;
};

// A tangle diagram in a disk. Arcs are the pieces of strand between
// undercrossings (or boundary points); an arc that only passes over other
// strands is a single arc even when it closes up. Crossing-free circles are
// kept as a count. A diagram with an empty boundary is a link diagram.
//
// Boundary points are listed counterclockwise. For 2-tangles the order is
// NW, SW, SE, NE.
class TangleDiagram {
 public:
  TangleDiagram() = default;
  // Arc ids may be arbitrary nonnegative integers; they are relabelled densely
  // in order of first appearance (crossings first, then boundary). Arcs in
  // [0, arc_count) that are never referenced are treated as free circles.
  TangleDiagram(std::vector<Crossing> crossings, std::vector<ArcId> boundary,
                int closed_components = 0, int arc_count = 0);

  int arc_count() const noexcept { return arc_count_; }
  const std::vector<Crossing>& crossings() const noexcept { return crossings_; }
  const std::vector<ArcId>& boundary() const noexcept { return boundary_; }
  int closed_components() const noexcept { return closed_components_; }
  // Half the number of boundary points.
  int n() const noexcept { return static_cast<int>(boundary_.size()) / 2; }
  bool is_link() const noexcept { return boundary_.empty(); }
  bool is_oriented() const;

  friend bool operator==(const TangleDiagram&, const TangleDiagram&) = default;

 private:
  int arc_count_ = 0;
  std::vector<Crossing> crossings_;
  std::vector<ArcId> boundary_;
  int closed_components_ = 0;
};

// Connectivity summary computed by following strands through crossings.
struct ComponentSummary {
  int boundary_strands = 0;    // strands with both ends on the boundary
  int closed_with_crossings = 0;
  int free_circles = 0;        // crossing-free circles
  // partner[i] = boundary position joined to position i by a strand.
  std::vector<int> partner;

  int closed_total() const { return closed_with_crossings + free_circles; }
};

ComponentSummary components(const TangleDiagram& d);

// Counterclockwise rotation by `steps` boundary positions (a quarter turn for
// 2-tangles): the point at position i moves to position i + steps.
TangleDiagram rotate_diagram(const TangleDiagram& d, int steps = 1);

// Horizontal composition: the east half of `a` (positions n..2n-1) is glued
// to the west half of `b` (positions n-1..0). Both must be n-tangles.
TangleDiagram compose_diagrams(const TangleDiagram& a, const TangleDiagram& b);

// Joins boundary positions pairwise (i, j) for every pair given. Remaining
// boundary points keep their counterclockwise order.
TangleDiagram join_boundary(const TangleDiagram& d, const std::vector<std::pair<int, int>>& pairs);

enum class ClosureKind { numerator, denominator };
TangleDiagram closure(const TangleDiagram& d, ClosureKind kind);

// Basic diagrams.
TangleDiagram trivial_link(int components);
TangleDiagram zero_tangle();
TangleDiagram infinity_tangle();
// Single crossing 2-tangle; sign +1 puts the SW-NE strand over.
TangleDiagram unit_twist(int sign);

// The n-tangle whose strands join the west point i to the east point
// 2n-1-i (for n = 2 this is the 0-tangle).
TangleDiagram identity_ntangle(int n);
// identity_ntangle(n) with strands at west positions j, j+1 crossed once;
// sign +1 puts the strand starting at j+1 over.
TangleDiagram elementary_crossing(int n, int j, int sign);
// Crossingless n-tangle realizing a noncrossing perfect matching of 2n points.
TangleDiagram matching_tangle(const std::vector<int>& partner);

struct BraidWord {
  int strands = 1;
  std::vector<int> letters;  // +-i stands for sigma_i^{+-1}, 1 <= i < strands

  BraidWord() = default;
  BraidWord(int strands, std::vector<int> letters);
  BraidWord power(int k) const;
  // Permutation induced on strand positions (0-based, top -> bottom).
  std::vector<int> permutation() const;
  std::string to_string() const;
};

// "n: i1 i2 ..." or "braid n: i1 i2 ...".
BraidWord parse_braid(const std::string& text);

// Closure of a braid. Sigma_i (positive letter) takes the strand at position
// i over the strand at position i+1; strands run top to bottom and every
// crossing carries its sign.
TangleDiagram braid_closure(const BraidWord& word);

// Diagram text format:
//   X <over> <under_in> <under_out> [sign]
//   B a1 a2 ... a2n
//   O <free circles>
// '#' starts a comment.
TangleDiagram parse_diagram(const std::string& text);
TangleDiagram read_diagram_file(const std::string& path);
std::string format_diagram(const TangleDiagram& d);

}  // namespace tanglelab
