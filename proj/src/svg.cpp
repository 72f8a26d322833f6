#include "linkforge/svg.hpp"

#include <algorithm>
#include <sstream>

namespace linkforge {

namespace {

constexpr int kCell = 80;
constexpr int kMargin = 48;
constexpr int kRadius = 14;

}  // namespace

std::string render_svg(const GridGraph& g, const std::optional<SvgOverlay>& overlay) {
  GridCoord min_x = g.points()[0].x, max_x = min_x;
  GridCoord min_y = g.points()[0].y, max_y = min_y;
  for (const GridPoint& p : g.points()) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const GridCoord width = (max_x - min_x) * kCell + 2 * kMargin;
  const GridCoord height = (max_y - min_y) * kCell + 2 * kMargin;
  // Lattice y grows upward; SVG y grows downward.
  auto px = [&](const GridPoint& p) { return (p.x - min_x) * kCell + kMargin; };
  auto py = [&](const GridPoint& p) { return (max_y - p.y) * kCell + kMargin; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<style>.edge{stroke:#9aa0a6;stroke-width:3}.node{fill:#fff;stroke:#202124;stroke-width:2}"
      << ".label{font:13px sans-serif;text-anchor:middle;dominant-baseline:central}"
      << ".edge-label{font:11px sans-serif;fill:#5f6368;text-anchor:middle}"
      << ".tour,.path{fill:none;stroke:#d93025;stroke-width:4;stroke-linejoin:round;opacity:0.8}</style>\n";

  out << "<g id=\"edges\">\n";
  for (const GridEdge& e : g.edges()) {
    const GridPoint& a = g.point(e.i);
    const GridPoint& b = g.point(e.j);
    out << "<line class=\"edge\" x1=\"" << px(a) << "\" y1=\"" << py(a) << "\" x2=\"" << px(b) << "\" y2=\"" << py(b)
        << "\"/>\n";
    out << "<text class=\"edge-label\" x=\"" << (px(a) + px(b)) / 2 + (a.y == b.y ? 0 : 12) << "\" y=\""
        << (py(a) + py(b)) / 2 - (a.y == b.y ? 6 : 0) << "\">e" << e.label << "</text>\n";
  }
  out << "</g>\n";

  if (overlay && !overlay->order.empty()) {
    out << "<" << (overlay->closed ? "polygon class=\"tour\"" : "polyline class=\"path\"") << " points=\"";
    for (std::size_t k = 0; k < overlay->order.size(); ++k) {
      const GridPoint& p = g.point(overlay->order[k]);
      out << (k ? " " : "") << px(p) << ',' << py(p);
    }
    out << "\"/>\n";
  }

  out << "<g id=\"nodes\">\n";
  for (const GridPoint& p : g.points()) {
    out << "<circle class=\"node\" cx=\"" << px(p) << "\" cy=\"" << py(p) << "\" r=\"" << kRadius << "\"/>\n";
    out << "<text class=\"label\" x=\"" << px(p) << "\" y=\"" << py(p) << "\">" << p.label << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace linkforge
