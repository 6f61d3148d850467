#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace ladder {

/// A lattice point in the plane; x is the column, y the row counted from
/// the bottom of the ladder.
struct Point {
  int x = 0;
  int y = 0;

  /// Antidiagonal index x+y.
  [[nodiscard]] constexpr int level() const { return x + y; }
  /// Position along the antidiagonal, x-y.
  [[nodiscard]] constexpr int offset() const { return x - y; }

  friend constexpr auto operator<=>(const Point &, const Point &) = default;
  friend constexpr Point operator+(Point a, Point b) {
    return {a.x + b.x, a.y + b.y};
  }
  friend constexpr Point operator-(Point a, Point b) {
    return {a.x - b.x, a.y - b.y};
  }
};

std::ostream &operator<<(std::ostream &os, Point p);
std::string to_string(Point p);
/// "(x1,y1),(x2,y2),..."
std::string to_string(const std::vector<Point> &pts);

} // namespace ladder
