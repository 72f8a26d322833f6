#pragma once

#include <optional>
#include <string>
#include <vector>

#include "linkforge/grid.hpp"

namespace linkforge {

struct SvgOverlay {
  std::vector<Label> order;
  bool closed = false;
};

// Static drawing of the grid: one <line class="edge"> per edge, one
// <circle class="node"> and label per point, and the order drawn as a
// <polygon class="tour"> or <polyline class="path"> when given. Output depends
// only on the inputs.
std::string render_svg(const GridGraph& g, const std::optional<SvgOverlay>& overlay = std::nullopt);

}  // namespace linkforge
