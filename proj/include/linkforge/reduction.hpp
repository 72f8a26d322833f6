#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "linkforge/geometry.hpp"
#include "linkforge/grid.hpp"

namespace linkforge {

// The R^4 image q_i of grid point p_i.
struct Point4 {
  Vec4 coords{};
  Label source_label = 0;

  Coord operator[](Axis axis) const noexcept { return coords[index(axis)]; }

  friend bool operator==(const Point4&, const Point4&) = default;
};

// Axis updated at each endpoint of one grid edge.
struct EdgeAxis {
  Label edge = 0;
  Label i = 0;
  Label k = 0;
  Axis at_i = Axis::A;
  Axis at_k = Axis::A;

  friend bool operator==(const EdgeAxis&, const EdgeAxis&) = default;
};

struct ReductionMap {
  GridGraph grid;
  std::vector<Point4> points;      // points[i - 1] is q_i
  std::vector<EdgeAxis> edge_axis;  // edge_axis[j - 1] describes edge j

  const Point4& q(Label label) const { return points.at(static_cast<std::size_t>(label) - 1); }
};

// Every coordinate starts at the point's label i. Each incident edge j then
// sets exactly one axis to n + j, chosen by the parity of the point's own
// coordinate and the side the neighbor lies on:
//
//   horizontal, x odd and neighbor at x-1, or x even and neighbor at x+1 -> a
//   horizontal, x odd and neighbor at x+1, or x even and neighbor at x-1 -> b
//   vertical,   y odd and neighbor at y-1, or y even and neighbor at y+1 -> c
//   vertical,   y odd and neighbor at y+1, or y even and neighbor at y-1 -> d
//
// Parity is mathematical parity, so -3 is odd. Throws std::logic_error if two
// edges would update the same axis of one point.
ReductionMap construct_points(const GridGraph& g);

// The axis a neighbor relation updates at `self`; empty if not adjacent.
std::optional<Axis> update_axis(const GridPoint& self, const GridPoint& neighbor) noexcept;

// Raised when two points agree on two or more axes.
class SharedAxesError : public std::domain_error {
 public:
  SharedAxesError(Label p, Label q, std::vector<Axis> axes);
  const std::vector<Axis>& axes() const noexcept { return axes_; }

 private:
  std::vector<Axis> axes_;
};

// The single axis on which p and q agree, or empty if they agree on none.
std::optional<Axis> shared_axis(const Point4& p, const Point4& q);

enum class ViolationKind {
  ShareCount,   // adjacent pair not sharing exactly one axis at n + j, or non-adjacent pair sharing any
  TripleAxis,   // three points on one axis value, or a length-2 grid path reusing its shared axis
  ThreeOnLine,  // two points agreeing on three or more axes, i.e. on one axis-parallel line
};

const char* violation_kind_name(ViolationKind kind) noexcept;

struct PositionViolation {
  ViolationKind kind = ViolationKind::ShareCount;
  std::vector<Label> labels;
  std::optional<Axis> axis;
  std::string detail;
};

struct PositionReport {
  bool ok = true;
  std::vector<PositionViolation> violations;
};

// Checks relaxed general position of the constructed points against the grid.
PositionReport validate_position(const ReductionMap& rm);

// Points file: "a b c d # i" per line, in label order.
std::string format_points(const ReductionMap& rm);

// Edge-axis map: "j i k axis_i axis_k" per line, in edge-label order.
std::string format_edge_axis(const ReductionMap& rm);

}  // namespace linkforge
