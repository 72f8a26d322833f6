#include "linkforge/reduction.hpp"

#include <map>
#include <sstream>

namespace linkforge {

namespace {

bool is_odd(GridCoord v) noexcept { return v % 2 != 0; }

std::string axes_text(const std::vector<Axis>& axes) {
  std::string out;
  for (Axis a : axes) out += axis_name(a);
  return out;
}

}  // namespace

std::optional<Axis> update_axis(const GridPoint& self, const GridPoint& neighbor) noexcept {
  if (!is_adjacent(self, neighbor)) return std::nullopt;
  if (neighbor.y == self.y) {
    const bool toward_a = is_odd(self.x) ? neighbor.x == self.x - 1 : neighbor.x == self.x + 1;
    return toward_a ? Axis::A : Axis::B;
  }
  const bool toward_c = is_odd(self.y) ? neighbor.y == self.y - 1 : neighbor.y == self.y + 1;
  return toward_c ? Axis::C : Axis::D;
}

ReductionMap construct_points(const GridGraph& g) {
  const auto n = static_cast<Coord>(g.n());
  ReductionMap rm{g, {}, {}};
  rm.points.reserve(g.n());
  for (const GridPoint& p : g.points()) {
    const Coord i = p.label;
    rm.points.push_back({{i, i, i, i}, p.label});
  }

  std::vector<std::array<bool, 4>> updated(g.n(), {false, false, false, false});
  auto apply = [&](Label self, Label other, Label edge) {
    const auto axis = update_axis(g.point(self), g.point(other));
    if (!axis) throw std::logic_error("edge " + std::to_string(edge) + " joins non-adjacent points");
    auto& slot = updated[self - 1][index(*axis)];
    if (slot) {
      throw std::logic_error("axis " + std::string(1, axis_name(*axis)) + " of point " +
                             std::to_string(self) + " updated twice");
    }
    slot = true;
    rm.points[self - 1].coords[index(*axis)] = n + edge;
    return *axis;
  };

  rm.edge_axis.reserve(g.m());
  for (const GridEdge& e : g.edges()) {
    const Axis at_i = apply(e.i, e.j, e.label);
    const Axis at_k = apply(e.j, e.i, e.label);
    rm.edge_axis.push_back({e.label, e.i, e.j, at_i, at_k});
  }
  return rm;
}

SharedAxesError::SharedAxesError(Label p, Label q, std::vector<Axis> axes)
    : std::domain_error("points " + std::to_string(p) + " and " + std::to_string(q) + " share axes " +
                        axes_text(axes)),
      axes_(std::move(axes)) {}

std::optional<Axis> shared_axis(const Point4& p, const Point4& q) {
  std::vector<Axis> agree;
  for (Axis axis : kAxes) {
    if (p[axis] == q[axis]) agree.push_back(axis);
  }
  if (agree.size() >= 2) throw SharedAxesError(p.source_label, q.source_label, std::move(agree));
  if (agree.empty()) return std::nullopt;
  return agree.front();
}

const char* violation_kind_name(ViolationKind kind) noexcept {
  switch (kind) {
    case ViolationKind::ShareCount: return "share-count";
    case ViolationKind::TripleAxis: return "triple-axis";
    case ViolationKind::ThreeOnLine: return "three-on-line";
  }
  return "?";
}

PositionReport validate_position(const ReductionMap& rm) {
  PositionReport report;
  const GridGraph& g = rm.grid;
  const auto n = static_cast<Coord>(g.n());
  auto add = [&](ViolationKind kind, std::vector<Label> labels, std::optional<Axis> axis, std::string detail) {
    report.violations.push_back({kind, std::move(labels), axis, std::move(detail)});
  };

  if (rm.points.size() != g.n()) {
    add(ViolationKind::ShareCount, {}, std::nullopt,
        "map holds " + std::to_string(rm.points.size()) + " points for " + std::to_string(g.n()) + " grid points");
    report.ok = false;
    return report;
  }

  for (std::size_t s = 0; s < rm.points.size(); ++s) {
    for (std::size_t t = s + 1; t < rm.points.size(); ++t) {
      const Point4& p = rm.points[s];
      const Point4& q = rm.points[t];
      std::vector<Axis> agree;
      for (Axis axis : kAxes) {
        if (p[axis] == q[axis]) agree.push_back(axis);
      }
      const std::vector<Label> pair{p.source_label, q.source_label};
      if (agree.size() >= 3) {
        add(ViolationKind::ThreeOnLine, pair, std::nullopt, "points agree on axes " + axes_text(agree));
      }
      const auto edge = g.edge_between(p.source_label, q.source_label);
      if (edge) {
        if (agree.size() != 1) {
          add(ViolationKind::ShareCount, pair, agree.empty() ? std::nullopt : std::optional(agree.front()),
              "adjacent points share " + std::to_string(agree.size()) + " axes");
          if (agree.empty()) {
            // Name the axis the edge should have joined on.
            const EdgeAxis& ea = rm.edge_axis.at(static_cast<std::size_t>(*edge) - 1);
            report.violations.back().axis = ea.at_i;
          }
        } else if (p[agree.front()] != n + *edge) {
          add(ViolationKind::ShareCount, pair, agree.front(),
              "shared value " + std::to_string(p[agree.front()]) + " is not n + " + std::to_string(*edge));
        }
      } else if (!agree.empty()) {
        add(ViolationKind::ShareCount, pair, agree.front(), "non-adjacent points share axes " + axes_text(agree));
      }
    }
  }

  // No coordinate value is held by three points on one axis.
  for (Axis axis : kAxes) {
    std::map<Coord, std::vector<Label>> holders;
    for (const Point4& p : rm.points) holders[p[axis]].push_back(p.source_label);
    for (auto& [value, labels] : holders) {
      if (labels.size() >= 3) {
        add(ViolationKind::TripleAxis, labels, axis, "value " + std::to_string(value) + " held by " +
                                                         std::to_string(labels.size()) + " points");
      }
    }
  }

  // Grid paths a - b - c never reuse the shared axis.
  auto single_shared = [&](Label u, Label v) -> std::optional<Axis> {
    std::optional<Axis> found;
    for (Axis axis : kAxes) {
      if (rm.q(u)[axis] != rm.q(v)[axis]) continue;
      if (found) return std::nullopt;
      found = axis;
    }
    return found;
  };
  for (const GridPoint& mid : g.points()) {
    const auto nbrs = g.neighbors(mid.label);
    for (std::size_t s = 0; s < nbrs.size(); ++s) {
      for (std::size_t t = s + 1; t < nbrs.size(); ++t) {
        const auto first = single_shared(nbrs[s], mid.label);
        const auto second = single_shared(mid.label, nbrs[t]);
        if (first && second && *first == *second) {
          add(ViolationKind::TripleAxis, {nbrs[s], mid.label, nbrs[t]}, first,
              "consecutive grid pairs share the same axis");
        }
      }
    }
  }

  report.ok = report.violations.empty();
  return report;
}

std::string format_points(const ReductionMap& rm) {
  std::ostringstream out;
  for (const Point4& p : rm.points) {
    out << p.coords[0] << ' ' << p.coords[1] << ' ' << p.coords[2] << ' ' << p.coords[3] << " # "
        << p.source_label << '\n';
  }
  return out.str();
}

std::string format_edge_axis(const ReductionMap& rm) {
  std::ostringstream out;
  out << "# edge i k axis_i axis_k\n";
  for (const EdgeAxis& e : rm.edge_axis) {
    out << e.edge << ' ' << e.i << ' ' << e.k << ' ' << axis_name(e.at_i) << ' ' << axis_name(e.at_k) << '\n';
  }
  return out.str();
}

}  // namespace linkforge
