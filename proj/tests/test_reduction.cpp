#include <doctest.h>

#include <set>

#include "linkforge/grid.hpp"
#include "linkforge/reduction.hpp"
#include "support/brute_force.hpp"

using namespace linkforge;

namespace {

GridGraph cycle_labeled_square() {
  return parse_grid(
      "1 1 1\n2 1 2\n2 2 3\n1 2 4\n"
      "e 1 2 1\ne 2 3 2\ne 3 4 3\ne 1 4 4\n");
}

GridGraph grid_of(std::vector<std::pair<GridCoord, GridCoord>> raw) { return build_grid(raw); }

}  // namespace

TEST_CASE("square with cycle-order labels") {
  const ReductionMap rm = construct_points(cycle_labeled_square());
  CHECK(rm.q(1).coords == Vec4{1, 5, 1, 8});
  CHECK(rm.q(2).coords == Vec4{2, 5, 2, 6});
  CHECK(rm.q(3).coords == Vec4{3, 7, 3, 6});
  CHECK(rm.q(4).coords == Vec4{4, 7, 4, 8});
  CHECK(validate_position(rm).ok);
  CHECK(format_points(rm) == "1 5 1 8 # 1\n2 5 2 6 # 2\n3 7 3 6 # 3\n4 7 4 8 # 4\n");

  CHECK(rm.edge_axis[0] == EdgeAxis{1, 1, 2, Axis::B, Axis::B});
  CHECK(rm.edge_axis[3] == EdgeAxis{4, 1, 4, Axis::D, Axis::D});
}

TEST_CASE("line of three") {
  const ReductionMap rm = construct_points(grid_of({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(rm.q(1).coords == Vec4{1, 4, 1, 1});
  CHECK(rm.q(2).coords == Vec4{5, 4, 2, 2});
  CHECK(rm.q(3).coords == Vec4{5, 3, 3, 3});
}

TEST_CASE("isolated point") {
  const ReductionMap rm = construct_points(grid_of({{7, 7}}));
  CHECK(rm.q(1).coords == Vec4{1, 1, 1, 1});
  CHECK(validate_position(rm).ok);
}

TEST_CASE("update axis follows lattice parity, negatives included") {
  CHECK(update_axis({1, 1, 1}, {2, 1, 2}) == Axis::B);
  CHECK(update_axis({2, 1, 2}, {1, 1, 1}) == Axis::B);
  CHECK(update_axis({2, 1, 2}, {3, 1, 3}) == Axis::A);
  CHECK(update_axis({3, 1, 3}, {2, 1, 2}) == Axis::A);
  CHECK(update_axis({1, 1, 1}, {1, 2, 2}) == Axis::D);
  CHECK(update_axis({1, 2, 2}, {1, 3, 3}) == Axis::C);
  CHECK(update_axis({-3, 0, 1}, {-4, 0, 2}) == Axis::A);
  CHECK(update_axis({-3, 0, 1}, {-2, 0, 2}) == Axis::B);
  CHECK(update_axis({0, -1, 1}, {0, -2, 2}) == Axis::C);
  CHECK_FALSE(update_axis({1, 1, 1}, {2, 2, 2}).has_value());
}

TEST_CASE("shared axis") {
  const Point4 q1{{1, 5, 1, 8}, 1}, q2{{2, 5, 2, 6}, 2}, q3{{3, 7, 3, 6}, 3};
  CHECK(shared_axis(q1, q2) == Axis::B);
  CHECK_FALSE(shared_axis(q1, q3).has_value());
  try {
    shared_axis(Point4{{1, 1, 1, 1}, 1}, Point4{{1, 1, 2, 2}, 2});
    FAIL("expected a shared-axes error");
  } catch (const SharedAxesError& e) {
    CHECK(e.axes() == std::vector<Axis>{Axis::A, Axis::B});
  }
}

TEST_CASE("forged maps trip the validator") {
  ReductionMap rm = construct_points(cycle_labeled_square());
  rm.points[1].coords[index(Axis::B)] = 9;
  const PositionReport report = validate_position(rm);
  REQUIRE_FALSE(report.ok);
  const auto& v = report.violations.front();
  CHECK(v.kind == ViolationKind::ShareCount);
  CHECK(v.labels == std::vector<Label>{1, 2});
  CHECK(v.axis == Axis::B);

  ReductionMap triple = construct_points(grid_of({{1, 1}, {2, 1}, {3, 1}, {5, 5}}));
  triple.points[3].coords = {4, 5, 4, 4};  // q1.b = q2.b = 5 already
  const PositionReport t = validate_position(triple);
  REQUIRE_FALSE(t.ok);
  bool saw_triple = false;
  for (const auto& violation : t.violations) saw_triple |= violation.kind == ViolationKind::TripleAxis;
  CHECK(saw_triple);

  // Both legs of the path 1-2-3 through the same shared axis.
  ReductionMap line = construct_points(grid_of({{1, 1}, {2, 1}, {3, 1}}));
  line.points[0].coords = {1, 4, 1, 1};
  line.points[1].coords = {2, 4, 2, 2};
  line.points[2].coords = {3, 4, 3, 3};
  bool saw_path = false;
  for (const auto& violation : validate_position(line).violations) {
    saw_path |= violation.kind == ViolationKind::TripleAxis && violation.labels == std::vector<Label>{1, 2, 3};
  }
  CHECK(saw_path);

  // q2 on the a-parallel line through q1.
  ReductionMap collinear = construct_points(grid_of({{1, 1}, {2, 1}, {3, 1}}));
  collinear.points[1].coords = {9, 4, 1, 1};
  bool saw_line = false;
  for (const auto& violation : validate_position(collinear).violations) {
    saw_line |= violation.kind == ViolationKind::ThreeOnLine && violation.labels == std::vector<Label>{1, 2};
  }
  CHECK(saw_line);
}

TEST_CASE("exhaustive structure for n <= 8 in a 3x3 box") {
  std::size_t graphs = 0;
  for (const auto& item : enumerate_connected_grids(8, {3, 3})) {
    const GridGraph& g = item.graph;
    CAPTURE(grid_id(g));
    const ReductionMap rm = construct_points(g);
    ++graphs;
    CHECK(validate_position(rm).ok);

    std::vector<brute::Cell> cells;
    for (const GridPoint& p : g.points()) cells.push_back({p.x, p.y});
    const auto expected = brute::reduce(cells);
    const auto n = static_cast<Coord>(g.n());
    const auto m = static_cast<Coord>(g.m());
    std::set<Vec4> distinct;
    for (std::size_t i = 0; i < g.n(); ++i) {
      const Vec4& q = rm.points[i].coords;
      CHECK(rm.points[i].source_label == static_cast<Label>(i + 1));
      for (std::size_t k = 0; k < 4; ++k) {
        CHECK(q[k] == expected[i][k]);
        CHECK(q[k] >= 1);
        CHECK(q[k] <= n + m);
        if (q[k] <= n) CHECK(q[k] == static_cast<Coord>(i + 1));
      }
      distinct.insert(q);
    }
    CHECK(distinct.size() == g.n());

    for (const GridEdge& e : g.edges()) {
      const auto axis = shared_axis(rm.q(e.i), rm.q(e.j));
      REQUIRE(axis.has_value());
      CHECK(rm.q(e.i)[*axis] == n + e.label);
      const EdgeAxis& ea = rm.edge_axis[static_cast<std::size_t>(e.label) - 1];
      const bool horizontal = g.point(e.i).y == g.point(e.j).y;
      CHECK(ea.at_i == ea.at_k);
      CHECK(ea.at_i == *axis);
      if (horizontal) {
        CHECK((ea.at_i == Axis::A || ea.at_i == Axis::B));
      } else {
        CHECK((ea.at_i == Axis::C || ea.at_i == Axis::D));
      }
    }
  }
  CHECK(graphs == 150);
}

TEST_CASE("edge axis table format") {
  const ReductionMap rm = construct_points(grid_of({{1, 1}, {2, 1}}));
  CHECK(format_edge_axis(rm) == "# edge i k axis_i axis_k\n1 1 2 b b\n");
}
