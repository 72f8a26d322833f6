#include <doctest.h>

#include "linkforge/grid.hpp"
#include "linkforge/hamiltonian.hpp"
#include "support/brute_force.hpp"

using namespace linkforge;

namespace {

std::vector<brute::Cell> cells_of(const GridGraph& g) {
  std::vector<brute::Cell> cells;
  for (const GridPoint& p : g.points()) cells.push_back({p.x, p.y});
  return cells;
}

GridGraph grid_of(std::vector<std::pair<GridCoord, GridCoord>> raw) { return build_grid(raw); }

}  // namespace

TEST_CASE("cycle examples") {
  const auto square = find_hamiltonian_cycle(grid_of({{1, 1}, {2, 1}, {2, 2}, {1, 2}}));
  REQUIRE(square.has_value());
  CHECK(square->order == std::vector<Label>{1, 2, 4, 3});

  CHECK_FALSE(find_hamiltonian_cycle(grid_of({{1, 1}, {2, 1}, {3, 1}})).has_value());
  CHECK_FALSE(find_hamiltonian_cycle(grid_of({{2, 1}, {1, 2}, {2, 2}, {3, 2}, {2, 3}})).has_value());
  CHECK_FALSE(find_hamiltonian_cycle(grid_of({{1, 1}})).has_value());
  CHECK_FALSE(find_hamiltonian_cycle(grid_of({{1, 1}, {2, 1}})).has_value());

  // Two squares joined at a corner: degrees are fine, no cycle.
  CHECK_FALSE(find_hamiltonian_cycle(grid_of({{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3}, {2, 3}})).has_value());
}

TEST_CASE("path examples") {
  const GridGraph line = grid_of({{1, 1}, {2, 1}, {3, 1}});
  const auto through = find_hamiltonian_path(line, 1, 3);
  REQUIRE(through.has_value());
  CHECK(through->order == std::vector<Label>{1, 2, 3});
  CHECK(through->start() == 1);
  CHECK(through->end() == 3);
  CHECK_FALSE(find_hamiltonian_path(line, 1, 2).has_value());

  const auto single = find_hamiltonian_path(grid_of({{4, 4}}), 1, 1);
  REQUIRE(single.has_value());
  CHECK(single->order == std::vector<Label>{1});

  CHECK_THROWS_AS(find_hamiltonian_path(line, 0, 3), std::invalid_argument);
  CHECK_THROWS_AS(find_hamiltonian_path(line, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(find_hamiltonian_path(line, 2, 2), std::invalid_argument);
}

TEST_CASE("witness validation") {
  const GridGraph square = grid_of({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
  const std::vector<Label> good{1, 2, 4, 3};
  const std::vector<Label> diagonal{1, 4, 2, 3};
  const std::vector<Label> repeated{1, 2, 4, 4};
  const std::vector<Label> short_order{1, 2, 4};
  CHECK(is_hamiltonian_cycle(square, good));
  CHECK_FALSE(is_hamiltonian_cycle(square, diagonal));
  CHECK_FALSE(is_hamiltonian_cycle(square, repeated));
  CHECK_FALSE(is_hamiltonian_cycle(square, short_order));
  CHECK(is_hamiltonian_path(square, short_order) == false);
  const std::vector<Label> path{3, 1, 2, 4};
  CHECK(is_hamiltonian_path(square, path));
}

TEST_CASE("color counts") {
  const auto [even, odd] = color_counts(grid_of({{1, 1}, {2, 1}, {3, 1}}));
  CHECK(even == 2);
  CHECK(odd == 1);
}

TEST_CASE("solver agrees with permutation brute force for n <= 8") {
  std::size_t cycles = 0, paths = 0;
  for (const auto& item : enumerate_connected_grids(8, {3, 3})) {
    const GridGraph& g = item.graph;
    const auto cells = cells_of(g);
    CAPTURE(grid_id(g));

    const auto expected = brute::ham_cycle(cells);
    const auto got = find_hamiltonian_cycle(g);
    REQUIRE(got.has_value() == expected.has_value());
    if (got) {
      ++cycles;
      CHECK(is_hamiltonian_cycle(g, got->order));
      CHECK(got->order == *expected);
    }

    const auto n = static_cast<Label>(g.n());
    if (n > 7) continue;
    for (Label s = 1; s <= n; ++s) {
      for (Label e = 1; e <= n; ++e) {
        if (s == e && n > 1) continue;
        const auto want = brute::ham_path(cells, s, e);
        const auto have = find_hamiltonian_path(g, s, e);
        REQUIRE(have.has_value() == want.has_value());
        if (have) {
          ++paths;
          CHECK(is_hamiltonian_path(g, have->order));
          CHECK(have->start() == s);
          CHECK(have->end() == e);
        }
      }
    }
  }
  CHECK(cycles == 8);
  CHECK(paths > 0);
}

TEST_CASE("parity pruning is sound") {
  for (const auto& item : enumerate_connected_grids(7, {3, 3})) {
    const auto [even, odd] = color_counts(item.graph);
    const std::size_t gap = even > odd ? even - odd : odd - even;
    if (gap > 0) CHECK_FALSE(find_hamiltonian_cycle(item.graph).has_value());
  }
}

TEST_CASE("larger structured grids") {
  std::vector<std::pair<GridCoord, GridCoord>> rect;
  for (GridCoord x = 1; x <= 6; ++x) {
    for (GridCoord y = 1; y <= 5; ++y) rect.push_back({x, y});
  }
  const GridGraph g = build_grid(rect);
  const auto cycle = find_hamiltonian_cycle(g);
  REQUIRE(cycle.has_value());
  CHECK(is_hamiltonian_cycle(g, cycle->order));
  const auto path = find_hamiltonian_path(g, 1, static_cast<Label>(g.n()));
  REQUIRE(path.has_value());
  CHECK(is_hamiltonian_path(g, path->order));

  rect.pop_back();
  CHECK_FALSE(find_hamiltonian_cycle(build_grid(rect)).has_value());
}

TEST_CASE("order text format") {
  CHECK(format_order(std::nullopt) == "NONE\n");
  CHECK(format_order(std::vector<Label>{1, 2, 4, 3}) == "1 2 4 3\n");
  CHECK(parse_order("1 2 4 3\n") == std::vector<Label>{1, 2, 4, 3});
  CHECK_FALSE(parse_order("NONE\n").has_value());
}
