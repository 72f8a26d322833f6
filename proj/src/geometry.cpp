#include "linkforge/geometry.hpp"

#include <algorithm>

namespace linkforge {

std::optional<Axis> axis_from_name(char name) noexcept {
  switch (name) {
    case 'a': return Axis::A;
    case 'b': return Axis::B;
    case 'c': return Axis::C;
    case 'd': return Axis::D;
    default: return std::nullopt;
  }
}

std::ostream& operator<<(std::ostream& os, Axis axis) { return os << axis_name(axis); }

std::ostream& operator<<(std::ostream& os, const Vec4& v) {
  return os << '(' << v[0] << ", " << v[1] << ", " << v[2] << ", " << v[3] << ')';
}

int hamming(const Vec4& p, const Vec4& q) noexcept {
  int count = 0;
  for (std::size_t k = 0; k < 4; ++k) count += p[k] != q[k] ? 1 : 0;
  return count;
}

std::optional<Direction> direction_of(const Segment4& s) noexcept {
  std::optional<Direction> dir;
  for (Axis axis : kAxes) {
    const std::size_t k = index(axis);
    if (s.from[k] == s.to[k]) continue;
    if (dir) return std::nullopt;
    dir = Direction{axis, s.to[k] > s.from[k] ? 1 : -1};
  }
  return dir;
}

bool box_contains(const Segment4& s, const Vec4& p) noexcept {
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [lo, hi] = std::minmax(s.from[k], s.to[k]);
    if (p[k] < lo || p[k] > hi) return false;
  }
  return true;
}

bool boxes_overlap(const Segment4& s, const Segment4& t) noexcept {
  for (std::size_t k = 0; k < 4; ++k) {
    const auto [slo, shi] = std::minmax(s.from[k], s.to[k]);
    const auto [tlo, thi] = std::minmax(t.from[k], t.to[k]);
    if (shi < tlo || thi < slo) return false;
  }
  return true;
}

}  // namespace linkforge
