#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkforge/geometry.hpp"
#include "linkforge/hamiltonian.hpp"
#include "linkforge/reduction.hpp"

namespace linkforge {

// Ordered R^4 vertices joined by links; a closed polyline also links last -> first.
struct RectPolyline {
  std::vector<Vec4> vertices;
  bool closed = false;

  // Raw segments between consecutive vertices (before merging collinear runs).
  std::vector<Segment4> segments() const;

  friend bool operator==(const RectPolyline&, const RectPolyline&) = default;
};

struct VerificationReport {
  bool rectilinear = true;
  bool simple = true;
  bool covers_all = true;
  bool per_link_coverage_ok = true;
  // Maximal co-directional collinear runs, each counted once.
  int link_count = 0;
  // Junctions where two segments continue in the same direction and merge.
  int merges = 0;
  std::vector<std::string> failures;

  bool all_ok() const noexcept { return rectilinear && simple && covers_all && per_link_coverage_ok; }
};

// Three mutually perpendicular links from qi to qj, changing the non-shared
// axes one at a time in ascending axis order. Throws std::invalid_argument
// unless the points share exactly one axis.
std::array<Segment4, 3> connect_leg(const Point4& qi, const Point4& qj);

// Closed tour through q_{order[0]}, ..., q_{order[n-1]}: 3n links. Each leg
// uses the connect_leg staircase unless that makes the tour touch itself or
// merge two links, in which case the other axis orders are tried leg by leg.
// Throws std::invalid_argument if the order is not a Hamiltonian cycle of
// rm.grid and std::runtime_error if no schedule works.
RectPolyline synthesize_tour(const ReductionMap& rm, const CycleOrder& cycle);

// Open path from q_start to q_end: 3(n - 1) links, legs chosen as for tours.
RectPolyline synthesize_path(const ReductionMap& rm, const PathOrder& path);

// Exact integer checks of a polyline against the constructed points of rm.
//
// Consecutive links must meet only at their shared vertex (a collinear
// reversal fails), non-consecutive links must not touch at all. Zero-length
// and non-axis-parallel segments are reported as non-rectilinear and left out
// of the simplicity test.
VerificationReport verify_polyline(const RectPolyline& poly, std::span<const Point4> points);
VerificationReport verify_polyline(const RectPolyline& poly, const ReductionMap& rm);

// Polyline file: "closed" or "open", then one "a b c d" vertex per line.
std::string format_polyline(const RectPolyline& poly);
RectPolyline parse_polyline(std::string_view text);

}  // namespace linkforge
