#include "linkforge/hamiltonian.hpp"

#include <stdexcept>
#include <string>

#include "text.hpp"

namespace linkforge {

namespace {

bool is_even_cell(const GridPoint& p) { return ((p.x + p.y) % 2) == 0; }

// Shared backtracking state. `closing` is the vertex the walk must finish next
// to: the start for cycles, the designated end for paths.
class Search {
 public:
  Search(const GridGraph& g, Label closing, bool cycle)
      : g_(g), n_(g.n()), closing_(closing), cycle_(cycle), visited_(g.n() + 1, false) {}

  std::optional<std::vector<Label>> run(Label start) {
    order_.clear();
    order_.push_back(start);
    visited_[start] = true;
    if (extend()) return order_;
    return std::nullopt;
  }

 private:
  bool extend() {
    const Label head = order_.back();
    if (order_.size() == n_) {
      if (cycle_) return g_.edge_between(head, closing_).has_value();
      return head == closing_;
    }
    if (!feasible(head)) return false;
    for (Label next : g_.neighbors(head)) {
      if (visited_[next]) continue;
      // A path may reach its designated end only as the final vertex.
      if (!cycle_ && next == closing_ && order_.size() + 1 < n_) continue;
      visited_[next] = true;
      order_.push_back(next);
      if (extend()) return true;
      order_.pop_back();
      visited_[next] = false;
    }
    return false;
  }

  // Every unvisited vertex keeps enough usable neighbors, and the unvisited
  // remainder stays reachable from the head.
  bool feasible(Label head) {
    for (Label v = 1; v <= static_cast<Label>(n_); ++v) {
      if (visited_[v]) continue;
      int usable = 0;
      for (Label w : g_.neighbors(v)) {
        if (!visited_[w] || w == head || (cycle_ && w == closing_)) ++usable;
      }
      const int needed = (!cycle_ && v == closing_) ? 1 : 2;
      if (usable < needed) return false;
    }
    reach_.assign(n_ + 1, false);
    stack_.clear();
    stack_.push_back(head);
    reach_[head] = true;
    std::size_t reached = 0;
    while (!stack_.empty()) {
      const Label v = stack_.back();
      stack_.pop_back();
      for (Label w : g_.neighbors(v)) {
        if (visited_[w] || reach_[w]) continue;
        reach_[w] = true;
        ++reached;
        stack_.push_back(w);
      }
    }
    return reached == n_ - order_.size();
  }

  const GridGraph& g_;
  std::size_t n_;
  Label closing_;
  bool cycle_;
  std::vector<bool> visited_;
  std::vector<Label> order_;
  std::vector<bool> reach_;
  std::vector<Label> stack_;
};

}  // namespace

bool is_hamiltonian_cycle(const GridGraph& g, std::span<const Label> order) {
  if (g.n() < 3 || order.size() != g.n() || !is_hamiltonian_path(g, order)) return false;
  return g.edge_between(order.back(), order.front()).has_value();
}

bool is_hamiltonian_path(const GridGraph& g, std::span<const Label> order) {
  if (order.size() != g.n()) return false;
  std::vector<bool> seen(g.n() + 1, false);
  for (Label v : order) {
    if (!g.has_label(v) || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (!g.edge_between(order[k - 1], order[k])) return false;
  }
  return true;
}

std::pair<std::size_t, std::size_t> color_counts(const GridGraph& g) {
  std::size_t even = 0;
  for (const GridPoint& p : g.points()) even += is_even_cell(p) ? 1 : 0;
  return {even, g.n() - even};
}

std::optional<CycleOrder> find_hamiltonian_cycle(const GridGraph& g) {
  if (g.n() < 3 || !is_connected(g)) return std::nullopt;
  for (const GridPoint& p : g.points()) {
    if (g.neighbors(p.label).size() < 2) return std::nullopt;
  }
  if (auto [even, odd] = color_counts(g); even != odd) return std::nullopt;

  Search search(g, 1, true);
  if (auto order = search.run(1)) return CycleOrder{std::move(*order)};
  return std::nullopt;
}

std::optional<PathOrder> find_hamiltonian_path(const GridGraph& g, Label start, Label end) {
  if (!g.has_label(start)) throw std::invalid_argument("unknown start label " + std::to_string(start));
  if (!g.has_label(end)) throw std::invalid_argument("unknown end label " + std::to_string(end));
  if (g.n() == 1) return PathOrder{{start}};
  if (start == end) throw std::invalid_argument("path start and end must differ");
  if (!is_connected(g)) return std::nullopt;

  // Colors alternate along the path: the start's color fills the even
  // positions, and the end's color is fixed by the parity of n.
  const bool start_even = is_even_cell(g.point(start));
  const bool end_even = is_even_cell(g.point(end));
  const auto [even, odd] = color_counts(g);
  const std::size_t start_color = start_even ? even : odd;
  const std::size_t other_color = start_even ? odd : even;
  if (start_color != (g.n() + 1) / 2 || other_color != g.n() / 2) return std::nullopt;
  if ((g.n() % 2 == 0) == (start_even == end_even)) return std::nullopt;

  Search search(g, end, false);
  if (auto order = search.run(start)) return PathOrder{std::move(*order)};
  return std::nullopt;
}

std::string format_order(const std::optional<std::vector<Label>>& order) {
  if (!order) return "NONE\n";
  std::string out;
  for (std::size_t k = 0; k < order->size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string((*order)[k]);
  }
  return out + '\n';
}

std::optional<std::vector<Label>> parse_order(std::string_view input) {
  std::vector<Label> labels;
  bool none = false;
  text::for_each_line(input, [&](std::size_t line_no, const std::vector<std::string_view>& tokens) {
    if (tokens.size() == 1 && tokens[0] == "NONE") {
      if (!labels.empty()) throw ParseError(line_no, "NONE after labels");
      none = true;
      return;
    }
    if (none) throw ParseError(line_no, "labels after NONE");
    for (auto token : tokens) labels.push_back(static_cast<Label>(text::parse_int(token, line_no)));
  });
  if (none) return std::nullopt;
  if (labels.empty()) throw ParseError(0, "empty order file");
  return labels;
}

}  // namespace linkforge
