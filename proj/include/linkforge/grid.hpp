#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace linkforge {

using Label = int;
using GridCoord = std::int64_t;

struct GridPoint {
  GridCoord x = 0;
  GridCoord y = 0;
  Label label = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// An edge between point labels i < j, carrying its own label in 1..m.
struct GridEdge {
  Label i = 0;
  Label j = 0;
  Label label = 0;

  friend bool operator==(const GridEdge&, const GridEdge&) = default;
};

// Lattice adjacency: the points differ by exactly 1 in exactly one coordinate.
bool is_adjacent(const GridPoint& p, const GridPoint& q) noexcept;

// An induced subgraph of the integer lattice with labeled points and edges.
//
// Points are stored in label order (points()[i - 1] has label i) and edges in
// edge-label order. Every adjacent pair of points is an edge and nothing else
// is. Instances are immutable once built.
class GridGraph {
 public:
  // Validates and assembles a graph from explicitly labeled points. Labels must
  // be a permutation of 1..n and coordinates pairwise distinct. When
  // `edge_labels` is empty, edges are labeled by ascending (min, max) endpoint
  // label; otherwise it must list every induced edge exactly once with labels
  // forming a permutation of 1..m.
  static GridGraph from_labeled(std::vector<GridPoint> points,
                                std::vector<GridEdge> edge_labels = {});

  std::size_t n() const noexcept { return points_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }

  std::span<const GridPoint> points() const noexcept { return points_; }
  std::span<const GridEdge> edges() const noexcept { return edges_; }

  const GridPoint& point(Label label) const;
  const GridEdge& edge(Label label) const;

  // Neighbor labels of `label`, ascending.
  std::span<const Label> neighbors(Label label) const;
  std::optional<Label> edge_between(Label i, Label j) const;
  std::optional<Label> label_at(GridCoord x, GridCoord y) const;

  bool has_label(Label label) const noexcept {
    return label >= 1 && static_cast<std::size_t>(label) <= points_.size();
  }

  // True when point and edge labels match what build_grid would assign.
  bool has_default_labels() const;

  friend bool operator==(const GridGraph& a, const GridGraph& b) {
    return a.points_ == b.points_ && a.edges_ == b.edges_;
  }

 private:
  GridGraph() = default;

  std::vector<GridPoint> points_;
  std::vector<GridEdge> edges_;
  std::vector<std::vector<Label>> adjacency_;
};

// Labels points 1..n in lexicographic (x, y) order and edges 1..m in ascending
// (min label, max label) order. Throws std::invalid_argument on duplicates.
GridGraph build_grid(std::span<const std::pair<GridCoord, GridCoord>> raw_points);

bool is_connected(const GridGraph& g);

// Grid file format: one "x y" per line; '#' starts a comment; blank lines are
// skipped. A third integer per point line assigns an explicit label, in which
// case every point line must carry one. With explicit labels, lines of the form
// "e i j label" may additionally fix the edge labels (all or none).
GridGraph parse_grid(std::string_view text);

// Emits points in label order. Labels and edge lines are written only when they
// differ from the deterministic labeling, so parse_grid(serialize_grid(g)) == g.
std::string serialize_grid(const GridGraph& g);

struct GridBox {
  int width = 1;
  int height = 1;
};

// Parses "WxH".
GridBox parse_box(std::string_view text);

struct EnumeratedGrid {
  GridGraph graph;
  // Number of distinct translates of this shape that fit in the box; all of
  // them collapse onto the canonical placement with its minimum corner at (1, 1).
  std::size_t placements = 0;
};

// Every connected induced grid subgraph with at most max_n points that fits in
// the box, once per translation class. Ordered by point count, then by the
// sorted coordinate list of the canonical placement.
std::vector<EnumeratedGrid> enumerate_connected_grids(std::size_t max_n, GridBox box);

// Short stable identifier for a grid: "n<count>:" followed by its sorted
// coordinates, e.g. "n2:1,1;2,1".
std::string grid_id(const GridGraph& g);

}  // namespace linkforge
