#include "linkforge/grid.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "linkforge/errors.hpp"
#include "text.hpp"

namespace linkforge {

namespace {

std::string coords_text(GridCoord x, GridCoord y) {
  return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
}

bool lex_less(const GridPoint& p, const GridPoint& q) {
  return std::pair(p.x, p.y) < std::pair(q.x, q.y);
}

}  // namespace

bool is_adjacent(const GridPoint& p, const GridPoint& q) noexcept {
  const GridCoord dx = p.x > q.x ? p.x - q.x : q.x - p.x;
  const GridCoord dy = p.y > q.y ? p.y - q.y : q.y - p.y;
  return (dx == 0 && dy == 1) || (dx == 1 && dy == 0);
}

GridGraph GridGraph::from_labeled(std::vector<GridPoint> points, std::vector<GridEdge> edge_labels) {
  if (points.empty()) throw std::invalid_argument("grid has no points");
  const std::size_t n = points.size();

  std::vector<GridPoint> by_label(n);
  std::vector<bool> seen(n, false);
  for (const GridPoint& p : points) {
    if (p.label < 1 || static_cast<std::size_t>(p.label) > n) {
      throw std::invalid_argument("point label " + std::to_string(p.label) + " outside 1.." +
                                  std::to_string(n));
    }
    if (seen[p.label - 1]) {
      throw std::invalid_argument("point label " + std::to_string(p.label) + " used twice");
    }
    seen[p.label - 1] = true;
    by_label[p.label - 1] = p;
  }

  std::map<std::pair<GridCoord, GridCoord>, Label> at;
  for (const GridPoint& p : by_label) {
    if (!at.emplace(std::pair(p.x, p.y), p.label).second) {
      throw std::invalid_argument("duplicate point " + coords_text(p.x, p.y));
    }
  }

  // Induced edges in (min, max) label order.
  std::vector<std::pair<Label, Label>> pairs;
  for (const GridPoint& p : by_label) {
    static constexpr GridCoord kSteps[4][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    for (const auto& step : kSteps) {
      auto it = at.find({p.x + step[0], p.y + step[1]});
      if (it != at.end() && p.label < it->second) pairs.emplace_back(p.label, it->second);
    }
  }
  std::sort(pairs.begin(), pairs.end());

  GridGraph g;
  g.points_ = std::move(by_label);
  g.adjacency_.assign(n, {});
  for (auto [i, j] : pairs) {
    g.adjacency_[i - 1].push_back(j);
    g.adjacency_[j - 1].push_back(i);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());

  const std::size_t m = pairs.size();
  if (edge_labels.empty()) {
    g.edges_.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
      g.edges_.push_back({pairs[k].first, pairs[k].second, static_cast<Label>(k + 1)});
    }
    return g;
  }

  if (edge_labels.size() != m) {
    throw std::invalid_argument("explicit edge labels cover " + std::to_string(edge_labels.size()) +
                                " edges but the grid has " + std::to_string(m));
  }
  std::set<std::pair<Label, Label>> induced(pairs.begin(), pairs.end());
  std::set<std::pair<Label, Label>> listed;
  g.edges_.assign(m, {});
  std::vector<bool> used(m, false);
  for (GridEdge e : edge_labels) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (!induced.contains({e.i, e.j})) {
      throw std::invalid_argument("labeled edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                                  ") joins non-adjacent points");
    }
    if (!listed.insert({e.i, e.j}).second) {
      throw std::invalid_argument("edge (" + std::to_string(e.i) + ", " + std::to_string(e.j) +
                                  ") labeled twice");
    }
    if (e.label < 1 || static_cast<std::size_t>(e.label) > m || used[e.label - 1]) {
      throw std::invalid_argument("edge labels must be a permutation of 1.." + std::to_string(m));
    }
    used[e.label - 1] = true;
    g.edges_[e.label - 1] = e;
  }
  return g;
}

const GridPoint& GridGraph::point(Label label) const {
  if (!has_label(label)) throw std::out_of_range("no point with label " + std::to_string(label));
  return points_[label - 1];
}

const GridEdge& GridGraph::edge(Label label) const {
  if (label < 1 || static_cast<std::size_t>(label) > edges_.size()) {
    throw std::out_of_range("no edge with label " + std::to_string(label));
  }
  return edges_[label - 1];
}

std::span<const Label> GridGraph::neighbors(Label label) const {
  if (!has_label(label)) throw std::out_of_range("no point with label " + std::to_string(label));
  return adjacency_[label - 1];
}

std::optional<Label> GridGraph::edge_between(Label i, Label j) const {
  if (!has_label(i) || !has_label(j) || i == j) return std::nullopt;
  if (i > j) std::swap(i, j);
  for (const GridEdge& e : edges_) {
    if (e.i == i && e.j == j) return e.label;
  }
  return std::nullopt;
}

std::optional<Label> GridGraph::label_at(GridCoord x, GridCoord y) const {
  for (const GridPoint& p : points_) {
    if (p.x == x && p.y == y) return p.label;
  }
  return std::nullopt;
}

bool GridGraph::has_default_labels() const {
  for (std::size_t k = 1; k < points_.size(); ++k) {
    if (!lex_less(points_[k - 1], points_[k])) return false;
  }
  for (std::size_t k = 1; k < edges_.size(); ++k) {
    if (std::pair(edges_[k - 1].i, edges_[k - 1].j) >= std::pair(edges_[k].i, edges_[k].j)) return false;
  }
  return true;
}

GridGraph build_grid(std::span<const std::pair<GridCoord, GridCoord>> raw_points) {
  std::vector<GridPoint> points;
  points.reserve(raw_points.size());
  for (auto [x, y] : raw_points) points.push_back({x, y, 0});
  std::sort(points.begin(), points.end(), lex_less);
  for (std::size_t k = 1; k < points.size(); ++k) {
    if (points[k - 1].x == points[k].x && points[k - 1].y == points[k].y) {
      throw std::invalid_argument("duplicate point " + coords_text(points[k].x, points[k].y));
    }
  }
  for (std::size_t k = 0; k < points.size(); ++k) points[k].label = static_cast<Label>(k + 1);
  return GridGraph::from_labeled(std::move(points));
}

bool is_connected(const GridGraph& g) {
  const std::size_t n = g.n();
  std::vector<bool> reached(n, false);
  std::vector<Label> stack{1};
  reached[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Label v = stack.back();
    stack.pop_back();
    for (Label w : g.neighbors(v)) {
      if (!reached[w - 1]) {
        reached[w - 1] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  return count == n;
}

GridGraph parse_grid(std::string_view input) {
  std::vector<std::pair<GridCoord, GridCoord>> plain;
  std::vector<GridPoint> labeled;
  std::vector<GridEdge> edges;
  std::map<std::pair<GridCoord, GridCoord>, std::size_t> first_seen;

  text::for_each_line(input, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
    using text::parse_int;
    if (tokens[0] == "e") {
      if (tokens.size() != 4) throw ParseError(line_no, "edge line must be 'e i j label'");
      edges.push_back({static_cast<Label>(parse_int(tokens[1], line_no)),
                       static_cast<Label>(parse_int(tokens[2], line_no)),
                       static_cast<Label>(parse_int(tokens[3], line_no))});
      return;
    }
    if (tokens.size() != 2 && tokens.size() != 3) throw ParseError(line_no, "expected 'x y' or 'x y label'");
    const GridCoord x = parse_int(tokens[0], line_no);
    const GridCoord y = parse_int(tokens[1], line_no);
    if (auto [it, fresh] = first_seen.emplace(std::pair(x, y), line_no); !fresh) {
      throw ParseError(line_no, "duplicate point " + coords_text(x, y) + " (first on line " +
                                    std::to_string(it->second) + ")");
    }
    if (tokens.size() == 2) {
      if (!labeled.empty()) throw ParseError(line_no, "point without label after labeled points");
      plain.emplace_back(x, y);
    } else {
      if (!plain.empty()) throw ParseError(line_no, "labeled point after unlabeled points");
      labeled.push_back({x, y, static_cast<Label>(parse_int(tokens[2], line_no))});
    }
  });

  if (plain.empty() && labeled.empty()) throw ParseError(0, "no points");
  if (!edges.empty() && labeled.empty()) {
    throw ParseError(0, "edge labels require explicitly labeled points");
  }
  try {
    if (!labeled.empty()) return GridGraph::from_labeled(std::move(labeled), std::move(edges));
    return build_grid(plain);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, e.what());
  }
}

std::string serialize_grid(const GridGraph& g) {
  std::ostringstream out;
  const bool explicit_labels = !g.has_default_labels();
  for (const GridPoint& p : g.points()) {
    out << p.x << ' ' << p.y;
    if (explicit_labels) out << ' ' << p.label;
    out << '\n';
  }
  if (explicit_labels) {
    for (const GridEdge& e : g.edges()) out << "e " << e.i << ' ' << e.j << ' ' << e.label << '\n';
  }
  return out.str();
}

GridBox parse_box(std::string_view box_text) {
  const auto sep = box_text.find_first_of("xX");
  if (sep == std::string_view::npos) throw ParseError(0, "box must be WxH, got '" + std::string(box_text) + "'");
  GridBox box{static_cast<int>(text::parse_int(box_text.substr(0, sep), 0)),
              static_cast<int>(text::parse_int(box_text.substr(sep + 1), 0))};
  if (box.width < 1 || box.height < 1) throw ParseError(0, "box dimensions must be positive");
  return box;
}

std::vector<EnumeratedGrid> enumerate_connected_grids(std::size_t max_n, GridBox box) {
  if (box.width < 1 || box.height < 1) throw std::invalid_argument("box dimensions must be positive");
  if (box.width * box.height > 64) throw std::invalid_argument("box larger than 64 cells");
  const int w = box.width;
  const int h = box.height;
  const int cells = w * h;
  max_n = std::min<std::size_t>(max_n, static_cast<std::size_t>(cells));

  using Shape = std::vector<std::pair<GridCoord, GridCoord>>;
  std::map<std::pair<std::size_t, Shape>, std::size_t> classes;

  auto canonical = [&](std::uint64_t mask) {
    Shape shape;
    GridCoord min_x = w, min_y = h;
    for (int c = 0; c < cells; ++c) {
      if (mask >> c & 1U) {
        min_x = std::min<GridCoord>(min_x, c % w);
        min_y = std::min<GridCoord>(min_y, c / w);
      }
    }
    for (int c = 0; c < cells; ++c) {
      if (mask >> c & 1U) shape.emplace_back(c % w - min_x + 1, c / w - min_y + 1);
    }
    std::sort(shape.begin(), shape.end());
    return shape;
  };

  // Grow placed connected sets one cell at a time.
  std::set<std::uint64_t> level;
  for (int c = 0; c < cells; ++c) level.insert(std::uint64_t{1} << c);
  for (std::size_t size = 1; size <= max_n && !level.empty(); ++size) {
    std::set<std::uint64_t> next;
    for (std::uint64_t mask : level) {
      ++classes[{size, canonical(mask)}];
      if (size == max_n) continue;
      for (int c = 0; c < cells; ++c) {
        if (!(mask >> c & 1U)) continue;
        const int x = c % w;
        const int y = c / w;
        if (x > 0 && !(mask >> (c - 1) & 1U)) next.insert(mask | std::uint64_t{1} << (c - 1));
        if (x + 1 < w && !(mask >> (c + 1) & 1U)) next.insert(mask | std::uint64_t{1} << (c + 1));
        if (y > 0 && !(mask >> (c - w) & 1U)) next.insert(mask | std::uint64_t{1} << (c - w));
        if (y + 1 < h && !(mask >> (c + w) & 1U)) next.insert(mask | std::uint64_t{1} << (c + w));
      }
    }
    level = std::move(next);
  }

  std::vector<EnumeratedGrid> out;
  out.reserve(classes.size());
  for (const auto& [key, placements] : classes) {
    out.push_back({build_grid(key.second), placements});
  }
  return out;
}

std::string grid_id(const GridGraph& g) {
  std::vector<std::pair<GridCoord, GridCoord>> coords;
  for (const GridPoint& p : g.points()) coords.emplace_back(p.x, p.y);
  std::sort(coords.begin(), coords.end());
  std::string id = "n" + std::to_string(g.n()) + ":";
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (k > 0) id += ';';
    id += std::to_string(coords[k].first) + "," + std::to_string(coords[k].second);
  }
  return id;
}

}  // namespace linkforge
