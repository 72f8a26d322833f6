#include "linkforge/synthesis.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "text.hpp"

namespace linkforge {

namespace {

// Exact test for p on the closed segment [s.from, s.to] in any direction.
bool on_segment(const Segment4& s, const Vec4& p) {
  if (!box_contains(s, p)) return false;
  std::size_t pivot = 4;
  for (std::size_t k = 0; k < 4; ++k) {
    if (s.from[k] != s.to[k]) {
      pivot = k;
      break;
    }
  }
  if (pivot == 4) return p == s.from;
  const Coord run = s.to[pivot] - s.from[pivot];
  const Coord offset = p[pivot] - s.from[pivot];
  for (std::size_t k = 0; k < 4; ++k) {
    if ((p[k] - s.from[k]) * run != (s.to[k] - s.from[k]) * offset) return false;
  }
  return true;
}

// Depth-first choice of an axis order per leg, ascending order first, keeping
// the links placed so far simple and free of merges.
class ScheduleSearch {
 public:
  ScheduleSearch(const ReductionMap& rm, const std::vector<Label>& order, bool closed)
      : rm_(rm), order_(order), closed_(closed), legs_(closed ? order.size() : order.size() - 1) {}

  bool run() { return descend(0); }
  const std::vector<Segment4>& links() const { return placed_; }

 private:
  bool fits(const Segment4& seg, bool closing) const {
    const Axis axis = direction_of(seg)->axis;
    for (std::size_t k = 0; k < placed_.size(); ++k) {
      const bool adjacent = k + 1 == placed_.size() || (closing && k == 0);
      if (adjacent) {
        if (direction_of(placed_[k])->axis == axis) return false;
      } else if (boxes_overlap(placed_[k], seg)) {
        return false;
      }
    }
    return true;
  }

  bool descend(std::size_t leg) {
    if (leg == legs_) return true;
    const Point4& from = rm_.q(order_[leg]);
    const Point4& to = rm_.q(order_[(leg + 1) % order_.size()]);
    std::vector<Axis> moving;
    for (Axis axis : kAxes) {
      if (from[axis] != to[axis]) moving.push_back(axis);
    }
    if (moving.size() != 3) {
      throw std::invalid_argument("points " + std::to_string(from.source_label) + " and " +
                                  std::to_string(to.source_label) + " are not adjacent");
    }
    const std::size_t base = placed_.size();
    do {
      Vec4 at = from.coords;
      bool ok = true;
      for (std::size_t k = 0; k < 3 && ok; ++k) {
        Vec4 next = at;
        next[index(moving[k])] = to[moving[k]];
        const Segment4 seg{at, next};
        const bool closing = closed_ && leg + 1 == legs_ && k == 2;
        ok = fits(seg, closing);
        if (ok) placed_.push_back(seg);
        at = next;
      }
      if (ok && descend(leg + 1)) return true;
      placed_.resize(base);
    } while (std::next_permutation(moving.begin(), moving.end()));
    return false;
  }

  const ReductionMap& rm_;
  const std::vector<Label>& order_;
  bool closed_;
  std::size_t legs_;
  std::vector<Segment4> placed_;
};

RectPolyline from_links(const std::vector<Segment4>& links, bool closed) {
  RectPolyline poly{{}, closed};
  poly.vertices.reserve(links.size() + 1);
  for (const Segment4& link : links) poly.vertices.push_back(link.from);
  if (!closed && !links.empty()) poly.vertices.push_back(links.back().to);
  return poly;
}

std::string label_list(const std::vector<Label>& labels) {
  std::string out;
  for (std::size_t k = 0; k < labels.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(labels[k]);
  }
  return out;
}

}  // namespace

std::vector<Segment4> RectPolyline::segments() const {
  std::vector<Segment4> out;
  if (vertices.size() < 2) return out;
  for (std::size_t k = 0; k + 1 < vertices.size(); ++k) out.push_back({vertices[k], vertices[k + 1]});
  if (closed) out.push_back({vertices.back(), vertices.front()});
  return out;
}

std::array<Segment4, 3> connect_leg(const Point4& qi, const Point4& qj) {
  std::vector<Axis> moving;
  for (Axis axis : kAxes) {
    if (qi[axis] != qj[axis]) moving.push_back(axis);
  }
  if (moving.size() != 3) {
    throw std::invalid_argument("points " + std::to_string(qi.source_label) + " and " +
                                std::to_string(qj.source_label) + " share " + std::to_string(4 - moving.size()) +
                                " axes; a leg needs exactly one");
  }
  std::array<Segment4, 3> links;
  Vec4 at = qi.coords;
  for (std::size_t k = 0; k < 3; ++k) {
    Vec4 next = at;
    next[index(moving[k])] = qj[moving[k]];
    links[k] = {at, next};
    at = next;
  }
  return links;
}

RectPolyline synthesize_tour(const ReductionMap& rm, const CycleOrder& cycle) {
  if (!is_hamiltonian_cycle(rm.grid, cycle.order)) {
    throw std::invalid_argument("order is not a Hamiltonian cycle of the grid");
  }
  ScheduleSearch search(rm, cycle.order, true);
  if (!search.run()) throw std::runtime_error("no simple staircase schedule for this cycle");
  return from_links(search.links(), true);
}

RectPolyline synthesize_path(const ReductionMap& rm, const PathOrder& path) {
  if (!is_hamiltonian_path(rm.grid, path.order)) {
    throw std::invalid_argument("order is not a Hamiltonian path of the grid");
  }
  if (path.order.size() == 1) return RectPolyline{{rm.q(path.order.front()).coords}, false};
  ScheduleSearch search(rm, path.order, false);
  if (!search.run()) throw std::runtime_error("no simple staircase schedule for this path");
  return from_links(search.links(), false);
}

VerificationReport verify_polyline(const RectPolyline& poly, std::span<const Point4> points) {
  VerificationReport report;
  const std::vector<Segment4> raw = poly.segments();

  // Drop zero-length segments; keep the rest with their direction, if any.
  struct Link {
    std::size_t raw_index;
    Segment4 seg;
    std::optional<Direction> dir;
  };
  std::vector<Link> links;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    if (raw[k].from == raw[k].to) {
      report.rectilinear = false;
      report.failures.push_back("link " + std::to_string(k + 1) + " has zero length");
      continue;
    }
    const auto dir = direction_of(raw[k]);
    if (!dir) {
      report.rectilinear = false;
      report.failures.push_back("link " + std::to_string(k + 1) + " is not axis-parallel");
    }
    links.push_back({k, raw[k], dir});
  }

  const std::size_t count = links.size();
  auto consecutive = [&](std::size_t s, std::size_t t) {
    return t == s + 1 || (poly.closed && s == 0 && t + 1 == count);
  };

  // Junction k joins link k to link k + 1 (cyclically when closed).
  const std::size_t junctions = count == 0 ? 0 : (poly.closed ? count : count - 1);
  std::vector<bool> merged(count, false);
  for (std::size_t k = 0; k < junctions; ++k) {
    const Link& a = links[k];
    const Link& b = links[(k + 1) % count];
    if (a.dir && b.dir && *a.dir == *b.dir) {
      merged[k] = true;
      ++report.merges;
    }
  }
  report.link_count = static_cast<int>(count) - report.merges;
  if (count > 0 && report.link_count == 0) report.link_count = 1;

  for (std::size_t s = 0; s < count; ++s) {
    if (!links[s].dir) continue;
    for (std::size_t t = s + 1; t < count; ++t) {
      if (!links[t].dir) continue;
      const std::string names = "links " + std::to_string(links[s].raw_index + 1) + " and " +
                                std::to_string(links[t].raw_index + 1);
      if (consecutive(s, t)) {
        if (links[s].dir->axis == links[t].dir->axis && links[s].dir->sign != links[t].dir->sign) {
          report.simple = false;
          report.failures.push_back(names + " retrace each other");
        }
      } else if (boxes_overlap(links[s].seg, links[t].seg)) {
        report.simple = false;
        report.failures.push_back(names + " intersect");
      }
    }
  }
  if (count > 0 && std::any_of(links.begin(), links.end(), [](const Link& l) { return !l.dir; })) {
    report.failures.push_back("simplicity not evaluated for non-axis-parallel links");
  }

  auto covered_by = [&](const Segment4& seg) {
    std::set<Label> hit;
    for (const Point4& q : points) {
      if (on_segment(seg, q.coords)) hit.insert(q.source_label);
    }
    return hit;
  };

  std::vector<std::set<Label>> per_link;
  per_link.reserve(count);
  for (const Link& l : links) per_link.push_back(covered_by(l.seg));

  for (const Point4& q : points) {
    bool hit = std::find(poly.vertices.begin(), poly.vertices.end(), q.coords) != poly.vertices.end();
    for (std::size_t k = 0; k < count && !hit; ++k) hit = per_link[k].contains(q.source_label);
    if (!hit) {
      report.covers_all = false;
      report.failures.push_back("constructed point " + std::to_string(q.source_label) + " not covered");
    }
  }

  // Group links into maximal merged runs, starting just after an unmerged junction.
  if (count > 0) {
    std::size_t first = 0;
    if (poly.closed) {
      for (std::size_t k = 0; k < count; ++k) {
        if (!merged[k]) {
          first = (k + 1) % count;
          break;
        }
      }
    }
    std::set<Label> run;
    std::vector<std::size_t> run_members;
    for (std::size_t step = 0; step < count; ++step) {
      const std::size_t k = (first + step) % count;
      run.insert(per_link[k].begin(), per_link[k].end());
      run_members.push_back(links[k].raw_index + 1);
      const bool continues = merged[k] && step + 1 < count;
      if (continues) continue;
      if (run.size() >= 2) {
        report.per_link_coverage_ok = false;
        std::vector<Label> labels(run.begin(), run.end());
        report.failures.push_back("link through segment " + std::to_string(run_members.front()) +
                                  " covers constructed points " + label_list(labels));
      }
      run.clear();
      run_members.clear();
    }
  }
  return report;
}

VerificationReport verify_polyline(const RectPolyline& poly, const ReductionMap& rm) {
  return verify_polyline(poly, std::span<const Point4>(rm.points));
}

std::string format_polyline(const RectPolyline& poly) {
  std::ostringstream out;
  out << (poly.closed ? "closed" : "open") << '\n';
  for (const Vec4& v : poly.vertices) out << v[0] << ' ' << v[1] << ' ' << v[2] << ' ' << v[3] << '\n';
  return out.str();
}

RectPolyline parse_polyline(std::string_view input) {
  RectPolyline poly;
  bool have_header = false;
  text::for_each_line(input, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
    if (!have_header) {
      if (tokens.size() != 1 || (tokens[0] != "closed" && tokens[0] != "open")) {
        throw ParseError(line_no, "expected 'closed' or 'open'");
      }
      poly.closed = tokens[0] == "closed";
      have_header = true;
      return;
    }
    if (tokens.size() != 4) throw ParseError(line_no, "expected four coordinates 'a b c d'");
    Vec4 v{};
    for (std::size_t k = 0; k < 4; ++k) v[k] = text::parse_int(tokens[k], line_no);
    poly.vertices.push_back(v);
  });
  if (!have_header) throw ParseError(0, "empty polyline file");
  return poly;
}

}  // namespace linkforge
