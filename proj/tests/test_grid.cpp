#include <doctest.h>

#include <algorithm>
#include <random>

#include "linkforge/errors.hpp"
#include "linkforge/grid.hpp"
#include "support/brute_force.hpp"

using namespace linkforge;

namespace {

GridGraph grid_of(std::vector<std::pair<GridCoord, GridCoord>> raw) { return build_grid(raw); }

}  // namespace

TEST_CASE("adjacency predicate") {
  CHECK(is_adjacent({1, 1, 0}, {2, 1, 0}));
  CHECK(is_adjacent({1, 1, 0}, {1, 0, 0}));
  CHECK_FALSE(is_adjacent({1, 1, 0}, {1, 1, 0}));
  CHECK_FALSE(is_adjacent({1, 1, 0}, {2, 2, 0}));
  CHECK_FALSE(is_adjacent({1, 1, 0}, {3, 1, 0}));
}

TEST_CASE("build_grid labels points by (x, y) and edges by endpoint labels") {
  const GridGraph g = grid_of({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
  REQUIRE(g.n() == 4);
  REQUIRE(g.m() == 4);
  CHECK(g.point(1) == GridPoint{1, 1, 1});
  CHECK(g.point(2) == GridPoint{1, 2, 2});
  CHECK(g.point(3) == GridPoint{2, 1, 3});
  CHECK(g.point(4) == GridPoint{2, 2, 4});
  CHECK(g.edge(1) == GridEdge{1, 2, 1});
  CHECK(g.edge(2) == GridEdge{1, 3, 2});
  CHECK(g.edge(3) == GridEdge{2, 4, 3});
  CHECK(g.edge(4) == GridEdge{3, 4, 4});
  CHECK(g.edge_between(4, 2) == 3);
  CHECK_FALSE(g.edge_between(1, 4).has_value());
  CHECK(g.label_at(2, 1) == 3);
  CHECK(g.has_default_labels());
}

TEST_CASE("single point and duplicates") {
  const GridGraph g = grid_of({{5, 5}});
  CHECK(g.n() == 1);
  CHECK(g.m() == 0);
  CHECK(is_connected(g));

  std::vector<std::pair<GridCoord, GridCoord>> dup{{1, 1}, {1, 1}};
  CHECK_THROWS_WITH_AS(build_grid(dup), doctest::Contains("(1, 1)"), std::invalid_argument);
  CHECK_THROWS_AS(build_grid(std::vector<std::pair<GridCoord, GridCoord>>{}), std::invalid_argument);
}

TEST_CASE("build_grid ignores input order") {
  std::vector<std::pair<GridCoord, GridCoord>> raw{{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {-1, 0}, {-1, -1}};
  const GridGraph reference = build_grid(raw);
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(raw.begin(), raw.end(), rng);
    CHECK(build_grid(raw) == reference);
  }
}

TEST_CASE("parse_grid") {
  const GridGraph two = parse_grid("1 1\n2 1\n");
  CHECK(two.n() == 2);
  CHECK(two.m() == 1);

  const GridGraph one = parse_grid("# comment\n1 1\n");
  CHECK(one.n() == 1);

  try {
    parse_grid("1 a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    parse_grid("1 1\n\n2 1 7\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  try {
    parse_grid("1 1\n2 1\n1 1\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("(1, 1)") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_grid(""), ParseError);
  CHECK_THROWS_AS(parse_grid("1 1 1\n2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("1 1 1\n2 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("1 1\n2 1\ne 1 2 1\n"), ParseError);
}

TEST_CASE("explicit point and edge labels") {
  const GridGraph g = parse_grid(
      "1 1 1\n2 1 2\n2 2 3\n1 2 4\n"
      "e 1 2 1\ne 2 3 2\ne 3 4 3\ne 1 4 4\n");
  CHECK(g.point(3) == GridPoint{2, 2, 3});
  CHECK(g.edge(3) == GridEdge{3, 4, 3});
  CHECK(g.edge(4) == GridEdge{1, 4, 4});
  CHECK_FALSE(g.has_default_labels());
  CHECK(parse_grid(serialize_grid(g)) == g);

  // An edge line naming a non-adjacent pair, or leaving an edge out.
  CHECK_THROWS_AS(parse_grid("1 1 1\n2 1 2\n2 2 3\ne 1 3 1\ne 2 3 2\n"), ParseError);
  CHECK_THROWS_AS(parse_grid("1 1 1\n2 1 2\n2 2 3\ne 1 2 1\n"), ParseError);
}

TEST_CASE("serialize and parse round trip") {
  for (const auto& item : enumerate_connected_grids(6, {3, 3})) {
    CHECK(parse_grid(serialize_grid(item.graph)) == item.graph);
  }
  const GridGraph negative = grid_of({{-3, -1}, {-2, -1}, {-2, 0}});
  CHECK(parse_grid(serialize_grid(negative)) == negative);
}

TEST_CASE("parse_box") {
  CHECK(parse_box("3x4").width == 3);
  CHECK(parse_box("3x4").height == 4);
  CHECK_THROWS_AS(parse_box("3"), ParseError);
  CHECK_THROWS_AS(parse_box("0x2"), ParseError);
}

TEST_CASE("enumeration small cases") {
  CHECK(enumerate_connected_grids(1, {1, 1}).size() == 1);
  CHECK(enumerate_connected_grids(2, {2, 1}).size() == 2);

  const auto square = enumerate_connected_grids(4, {2, 2});
  const bool has_square = std::any_of(square.begin(), square.end(), [](const EnumeratedGrid& e) {
    return e.graph.n() == 4 && e.graph.m() == 4;
  });
  CHECK(has_square);
}

TEST_CASE("enumeration matches subset brute force") {
  for (auto [w, h, max_n] : {std::tuple{3, 3, 8}, std::tuple{2, 4, 8}, std::tuple{4, 3, 5}, std::tuple{6, 1, 6}}) {
    CAPTURE(w);
    CAPTURE(h);
    const auto expected = brute::polyomino_counts(w, h, max_n);
    std::map<int, int> got;
    for (const auto& item : enumerate_connected_grids(max_n, {w, h})) ++got[static_cast<int>(item.graph.n())];
    CHECK(got == expected);
  }
}

TEST_CASE("enumerated grids are induced, connected, unique and ordered") {
  const auto all = enumerate_connected_grids(8, {3, 3});
  CHECK(all.size() == 150);
  std::set<std::string> ids;
  for (std::size_t k = 0; k < all.size(); ++k) {
    const GridGraph& g = all[k].graph;
    CHECK(is_connected(g));
    CHECK(ids.insert(grid_id(g)).second);
    CHECK(all[k].placements >= 1);
    if (k > 0) CHECK(all[k - 1].graph.n() <= g.n());
    std::size_t adjacent_pairs = 0;
    for (Label i = 1; i <= static_cast<Label>(g.n()); ++i) {
      for (Label j = i + 1; j <= static_cast<Label>(g.n()); ++j) {
        const bool adj = is_adjacent(g.point(i), g.point(j));
        adjacent_pairs += adj;
        CHECK(g.edge_between(i, j).has_value() == adj);
      }
    }
    CHECK(adjacent_pairs == g.m());
  }
  CHECK(grid_id(all[1].graph) == "n2:1,1;1,2");
}

TEST_CASE("connectivity") {
  CHECK(is_connected(grid_of({{1, 1}, {2, 1}, {2, 2}})));
  CHECK_FALSE(is_connected(grid_of({{1, 1}, {3, 1}})));
  CHECK_FALSE(is_connected(grid_of({{1, 1}, {2, 2}})));
}
