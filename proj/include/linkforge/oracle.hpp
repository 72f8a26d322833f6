#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "linkforge/reduction.hpp"
#include "linkforge/synthesis.hpp"

namespace linkforge {

// Exact minimum-link search over staircase tours and paths.
//
// A candidate visits the points in some order and joins each consecutive pair
// by a staircase that changes the differing axes one at a time, in any axis
// order. When the last link of one leg and the first link of the next run in
// the same direction, they form one straight link through the shared point and
// count once. Candidates that are not simple are discarded.

enum class Certification {
  ExactWithinModel,  // the whole staircase space was searched
  BoundOnly,         // the node budget ran out; min_links is an upper bound
};

const char* certification_name(Certification c) noexcept;

// How a leg may meet the next one at a visited point.
enum class JunctionRule {
  Merge,         // co-directional links merge into one straight link
  TurnAtPoints,  // co-directional continuation is forbidden; every point is a turn
};

struct OracleLimits {
  std::size_t max_points = 6;
  std::uint64_t node_budget = 100'000'000;
  JunctionRule junctions = JunctionRule::Merge;
};

struct OracleResult {
  int min_links = 0;
  RectPolyline witness;
  std::vector<Label> order;               // visiting order of the witness
  std::vector<std::vector<Axis>> schedule;  // axis order of each leg
  int merges = 0;                          // merged junctions in the witness
  Certification certified = Certification::ExactWithinModel;
  std::uint64_t explored = 0;
};

struct HammingBound {
  int value = 0;
  std::vector<Label> best_order;
};

int hamming(const Point4& p, const Point4& q) noexcept;

// Minimum over cyclic visiting orders of the summed Hamming distance between
// consecutive points. The first point is fixed and the second label must be
// below the last, so each cycle is scored once; best_order is the
// lexicographically least optimal order. Needs n >= 3; throws CapacityError
// for n > cap.
HammingBound cyclic_hamming_lower_bound(std::span<const Point4> points, std::size_t cap = 9);

// Throws std::invalid_argument for n < 3 or coincident points, CapacityError
// beyond limits.max_points.
OracleResult min_link_tour(std::span<const Point4> points, const OracleLimits& limits = {});

// start and end are point labels; start == end only when n == 1.
OracleResult min_link_path(std::span<const Point4> points, Label start, Label end,
                           const OracleLimits& limits = {});

}  // namespace linkforge
