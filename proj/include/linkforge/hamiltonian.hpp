#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linkforge/grid.hpp"

namespace linkforge {

// A Hamiltonian cycle as a label sequence; the closing edge back to order[0] is implicit.
struct CycleOrder {
  std::vector<Label> order;

  friend bool operator==(const CycleOrder&, const CycleOrder&) = default;
};

struct PathOrder {
  std::vector<Label> order;

  Label start() const { return order.front(); }
  Label end() const { return order.back(); }

  friend bool operator==(const PathOrder&, const PathOrder&) = default;
};

// Permutation of 1..n whose consecutive pairs (cyclically) are all edges; n >= 3.
bool is_hamiltonian_cycle(const GridGraph& g, std::span<const Label> order);
bool is_hamiltonian_path(const GridGraph& g, std::span<const Label> order);

// Checkerboard color counts (x + y even, x + y odd).
std::pair<std::size_t, std::size_t> color_counts(const GridGraph& g);

// Backtracking search with degree, remainder-connectivity and checkerboard
// parity pruning. Neighbors are tried in ascending label order, so the witness
// is the lexicographically least cycle starting at label 1.
std::optional<CycleOrder> find_hamiltonian_cycle(const GridGraph& g);

// Throws std::invalid_argument for unknown labels or start == end with n > 1.
std::optional<PathOrder> find_hamiltonian_path(const GridGraph& g, Label start, Label end);

// Order file: the labels on one line separated by spaces, or "NONE".
std::string format_order(const std::optional<std::vector<Label>>& order);
std::optional<std::vector<Label>> parse_order(std::string_view text);

}  // namespace linkforge
