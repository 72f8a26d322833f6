#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <ostream>

namespace linkforge {

using Coord = std::int64_t;
using Vec4 = std::array<Coord, 4>;

// The four axes of R^4, in the order a < b < c < d.
enum class Axis : std::uint8_t { A = 0, B = 1, C = 2, D = 3 };

inline constexpr std::array<Axis, 4> kAxes{Axis::A, Axis::B, Axis::C, Axis::D};

constexpr std::size_t index(Axis axis) noexcept { return static_cast<std::size_t>(axis); }

constexpr char axis_name(Axis axis) noexcept { return "abcd"[index(axis)]; }

std::optional<Axis> axis_from_name(char name) noexcept;

std::ostream& operator<<(std::ostream& os, Axis axis);
std::ostream& operator<<(std::ostream& os, const Vec4& v);

// Number of axes on which p and q differ.
int hamming(const Vec4& p, const Vec4& q) noexcept;

struct Segment4 {
  Vec4 from{};
  Vec4 to{};
};

// Axis and orientation of a rectilinear segment.
struct Direction {
  Axis axis = Axis::A;
  int sign = 0;  // +1 or -1

  friend bool operator==(const Direction&, const Direction&) = default;
};

// The direction of an axis-parallel, non-degenerate segment; empty otherwise.
std::optional<Direction> direction_of(const Segment4& s) noexcept;

// An axis-parallel segment coincides with its bounding box, so containment and
// intersection reduce to per-axis closed-interval tests over integers.
bool box_contains(const Segment4& s, const Vec4& p) noexcept;
bool boxes_overlap(const Segment4& s, const Segment4& t) noexcept;

}  // namespace linkforge
