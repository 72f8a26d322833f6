#include "linkforge/oracle.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "linkforge/errors.hpp"

namespace linkforge {

namespace {

std::vector<Point4> sorted_by_label(std::span<const Point4> points) {
  std::vector<Point4> sorted(points.begin(), points.end());
  std::sort(sorted.begin(), sorted.end(),
            [](const Point4& p, const Point4& q) { return p.source_label < q.source_label; });
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    if (sorted[k - 1].source_label == sorted[k].source_label) {
      throw std::invalid_argument("label " + std::to_string(sorted[k].source_label) + " used twice");
    }
  }
  for (std::size_t s = 0; s < sorted.size(); ++s) {
    for (std::size_t t = s + 1; t < sorted.size(); ++t) {
      if (sorted[s].coords == sorted[t].coords) {
        throw std::invalid_argument("points " + std::to_string(sorted[s].source_label) + " and " +
                                    std::to_string(sorted[t].source_label) + " coincide");
      }
    }
  }
  return sorted;
}

int sign_of(Coord v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Branch and bound over staircase schedules, one visiting order at a time.
// Orders and schedules are fed in lexicographic order and only strict
// improvements replace the incumbent, so the final witness is the least
// optimal (order, schedule) pair.
class StaircaseSearch {
 public:
  StaircaseSearch(const std::vector<Point4>& points, const OracleLimits& limits, bool closed)
      : points_(points), limits_(limits), closed_(closed) {}

  bool exhausted() const noexcept { return exhausted_; }
  bool found() const noexcept { return best_links_ != INT_MAX; }

  void consider(const std::vector<std::size_t>& order) {
    if (!tick()) return;
    order_ = order;
    build_legs();

    int total_h = 0;
    for (const auto& leg : legs_) total_h += static_cast<int>(leg.moving.size());
    if (total_h - count_mergeable(0) >= best_links_) return;

    suffix_h_.assign(legs_.size() + 1, 0);
    for (std::size_t k = legs_.size(); k-- > 0;) {
      suffix_h_[k] = suffix_h_[k + 1] + static_cast<int>(legs_[k].moving.size());
    }
    placed_.clear();
    dirs_.clear();
    schedule_.assign(legs_.size(), {});
    merges_ = 0;
    descend(0);
  }

  OracleResult result() const {
    OracleResult r;
    r.min_links = best_links_;
    r.witness = best_poly_;
    for (std::size_t idx : best_order_) r.order.push_back(points_[idx].source_label);
    r.schedule = best_schedule_;
    r.merges = best_merges_;
    r.certified = exhausted_ ? Certification::BoundOnly : Certification::ExactWithinModel;
    r.explored = explored_;
    return r;
  }

 private:
  struct Leg {
    std::size_t from = 0;
    std::size_t to = 0;
    std::vector<Axis> moving;
  };

  bool tick() {
    if (exhausted_) return false;
    if (++explored_ > limits_.node_budget) {
      exhausted_ = true;
      return false;
    }
    return true;
  }

  void build_legs() {
    legs_.clear();
    const std::size_t n = order_.size();
    const std::size_t count = closed_ ? n : n - 1;
    for (std::size_t k = 0; k < count; ++k) {
      Leg leg{order_[k], order_[(k + 1) % n], {}};
      for (Axis axis : kAxes) {
        if (points_[leg.from][axis] != points_[leg.to][axis]) leg.moving.push_back(axis);
      }
      legs_.push_back(std::move(leg));
    }
    // mergeable_[j]: legs j-1 and j (cyclically) can continue straight through their shared point.
    mergeable_.assign(legs_.size(), false);
    if (limits_.junctions != JunctionRule::Merge) return;
    for (std::size_t j = 0; j < legs_.size(); ++j) {
      if (j == 0 && !closed_) continue;
      const Leg& in = legs_[(j + legs_.size() - 1) % legs_.size()];
      const Leg& out = legs_[j];
      const Point4& a = points_[in.from];
      const Point4& b = points_[in.to];
      const Point4& c = points_[out.to];
      for (Axis axis : kAxes) {
        const int s1 = sign_of(b[axis] - a[axis]);
        const int s2 = sign_of(c[axis] - b[axis]);
        if (s1 != 0 && s1 == s2) mergeable_[j] = true;
      }
    }
  }

  // Mergeable junctions still undecided before leg k is placed.
  int count_mergeable(std::size_t k) const {
    int count = 0;
    for (std::size_t j = std::max<std::size_t>(k, 1); j < legs_.size(); ++j) count += mergeable_[j] ? 1 : 0;
    if (closed_ && !legs_.empty()) count += mergeable_[0] ? 1 : 0;
    return count;
  }

  // Checks and appends one segment; returns false if it breaks simplicity or the junction rule.
  bool push_segment(const Segment4& seg, bool closes_tour) {
    const Direction dir = *direction_of(seg);
    const std::size_t t = placed_.size();
    auto junction_ok = [&](const Direction& other) {
      if (other.axis != dir.axis) return true;
      if (other.sign != dir.sign) return false;
      if (limits_.junctions != JunctionRule::Merge) return false;
      ++merges_;
      return true;
    };
    if (t > 0 && !junction_ok(dirs_[t - 1])) return false;
    for (std::size_t s = 0; s + 1 < t; ++s) {
      if (closes_tour && s == 0) {
        if (!junction_ok(dirs_[0])) return false;
        continue;
      }
      if (boxes_overlap(placed_[s], seg)) return false;
    }
    placed_.push_back(seg);
    dirs_.push_back(dir);
    return true;
  }

  void descend(std::size_t k) {
    if (k == legs_.size()) {
      record();
      return;
    }
    const int lower = static_cast<int>(placed_.size()) - merges_ + suffix_h_[k] - count_mergeable(k);
    if (lower >= best_links_) return;

    const Leg& leg = legs_[k];
    std::vector<Axis> axes = leg.moving;
    do {
      if (!tick()) return;
      const std::size_t mark = placed_.size();
      const int merges_mark = merges_;
      Vec4 at = points_[leg.from].coords;
      bool ok = true;
      for (std::size_t step = 0; step < axes.size() && ok; ++step) {
        Vec4 next = at;
        next[index(axes[step])] = points_[leg.to][axes[step]];
        const bool closes = closed_ && k + 1 == legs_.size() && step + 1 == axes.size();
        ok = push_segment({at, next}, closes);
        at = next;
      }
      if (ok) {
        schedule_[k] = axes;
        descend(k + 1);
      }
      placed_.resize(mark);
      dirs_.resize(mark);
      merges_ = merges_mark;
    } while (std::next_permutation(axes.begin(), axes.end()));
  }

  void record() {
    const int links = static_cast<int>(placed_.size()) - merges_;
    if (links >= best_links_) return;
    RectPolyline poly{{}, closed_};
    for (const Segment4& s : placed_) poly.vertices.push_back(s.from);
    if (!closed_) poly.vertices.push_back(placed_.empty() ? points_[order_.front()].coords : placed_.back().to);
    const VerificationReport report = verify_polyline(poly, points_);
    if (!report.all_ok()) return;
    if (report.link_count != links) {
      throw std::logic_error("oracle link count " + std::to_string(links) + " disagrees with verifier " +
                             std::to_string(report.link_count));
    }
    best_links_ = links;
    best_poly_ = std::move(poly);
    best_order_ = order_;
    best_schedule_ = schedule_;
    best_merges_ = merges_;
  }

  const std::vector<Point4>& points_;
  const OracleLimits& limits_;
  bool closed_;

  std::vector<std::size_t> order_;
  std::vector<Leg> legs_;
  std::vector<bool> mergeable_;
  std::vector<int> suffix_h_;
  std::vector<Segment4> placed_;
  std::vector<Direction> dirs_;
  std::vector<std::vector<Axis>> schedule_;
  int merges_ = 0;

  int best_links_ = INT_MAX;
  RectPolyline best_poly_;
  std::vector<std::size_t> best_order_;
  std::vector<std::vector<Axis>> best_schedule_;
  int best_merges_ = 0;

  std::uint64_t explored_ = 0;
  bool exhausted_ = false;
};

OracleResult finish(const StaircaseSearch& search) {
  if (!search.found()) {
    if (search.exhausted()) throw CapacityError("node budget exhausted before any simple witness was found");
    throw std::runtime_error("no simple staircase candidate exists");
  }
  return search.result();
}

}  // namespace

const char* certification_name(Certification c) noexcept {
  return c == Certification::ExactWithinModel ? "exact-within-model" : "bound-only";
}

int hamming(const Point4& p, const Point4& q) noexcept { return hamming(p.coords, q.coords); }

HammingBound cyclic_hamming_lower_bound(std::span<const Point4> input, std::size_t cap) {
  if (input.size() < 3) throw std::invalid_argument("a cyclic order needs at least 3 points");
  if (input.size() > cap) {
    throw CapacityError("cyclic Hamming bound limited to " + std::to_string(cap) + " points, got " +
                        std::to_string(input.size()));
  }
  const std::vector<Point4> points = sorted_by_label(input);
  const std::size_t n = points.size();

  std::vector<std::vector<int>> dist(n, std::vector<int>(n, 0));
  int min_leg = 4;
  for (std::size_t s = 0; s < n; ++s) {
    for (std::size_t t = 0; t < n; ++t) {
      dist[s][t] = hamming(points[s], points[t]);
      if (s != t) min_leg = std::min(min_leg, dist[s][t]);
    }
  }

  int best = INT_MAX;
  std::vector<std::size_t> best_order;
  std::vector<std::size_t> order{0};
  std::vector<bool> used(n, false);
  used[0] = true;

  auto dfs = [&](auto&& self, int partial) -> void {
    const std::size_t placed = order.size();
    if (partial + min_leg * static_cast<int>(n - placed + 1) >= best) return;
    if (placed == n) {
      if (order[1] > order.back()) return;
      const int total = partial + dist[order.back()][0];
      if (total < best) {
        best = total;
        best_order = order;
      }
      return;
    }
    for (std::size_t v = 1; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      order.push_back(v);
      self(self, partial + dist[order[placed - 1]][v]);
      order.pop_back();
      used[v] = false;
    }
  };
  dfs(dfs, 0);

  HammingBound bound{best, {}};
  for (std::size_t idx : best_order) bound.best_order.push_back(points[idx].source_label);
  return bound;
}

OracleResult min_link_tour(std::span<const Point4> input, const OracleLimits& limits) {
  if (input.size() < 3) throw std::invalid_argument("a tour needs at least 3 points");
  if (input.size() > limits.max_points) {
    throw CapacityError("tour oracle limited to " + std::to_string(limits.max_points) + " points, got " +
                        std::to_string(input.size()));
  }
  const std::vector<Point4> points = sorted_by_label(input);
  const std::size_t n = points.size();

  StaircaseSearch search(points, limits, true);
  std::vector<std::size_t> rest(n - 1);
  std::iota(rest.begin(), rest.end(), 1);
  do {
    if (rest.front() > rest.back()) continue;
    std::vector<std::size_t> order{0};
    order.insert(order.end(), rest.begin(), rest.end());
    search.consider(order);
  } while (!search.exhausted() && std::next_permutation(rest.begin(), rest.end()));
  return finish(search);
}

OracleResult min_link_path(std::span<const Point4> input, Label start, Label end, const OracleLimits& limits) {
  if (input.empty()) throw std::invalid_argument("a path needs at least one point");
  if (input.size() > limits.max_points) {
    throw CapacityError("path oracle limited to " + std::to_string(limits.max_points) + " points, got " +
                        std::to_string(input.size()));
  }
  const std::vector<Point4> points = sorted_by_label(input);
  const std::size_t n = points.size();
  auto find = [&](Label label) {
    for (std::size_t k = 0; k < n; ++k) {
      if (points[k].source_label == label) return k;
    }
    throw std::invalid_argument("unknown label " + std::to_string(label));
  };
  const std::size_t s = find(start);
  const std::size_t e = find(end);
  if (n == 1) {
    OracleResult r;
    r.witness = RectPolyline{{points[0].coords}, false};
    r.order = {points[0].source_label};
    r.explored = 1;
    return r;
  }
  if (s == e) throw std::invalid_argument("path start and end must differ");

  StaircaseSearch search(points, limits, false);
  std::vector<std::size_t> middle;
  for (std::size_t k = 0; k < n; ++k) {
    if (k != s && k != e) middle.push_back(k);
  }
  do {
    std::vector<std::size_t> order{s};
    order.insert(order.end(), middle.begin(), middle.end());
    order.push_back(e);
    search.consider(order);
  } while (!search.exhausted() && std::next_permutation(middle.begin(), middle.end()));
  return finish(search);
}

}  // namespace linkforge
