#pragma once

#include "ladder/point.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ladder {

enum class Step : std::uint8_t { East, North };

/// A monotone lattice path: unit steps East (1,0) or North (0,1).
///
/// Every step raises the level x+y by one, so the path meets each
/// antidiagonal between its endpoints in exactly one point.
class LatticePath {
public:
  LatticePath() = default;
  explicit LatticePath(Point start, std::vector<Step> steps = {});

  /// Build from consecutive points; throws InvalidInput on a non-unit step.
  static LatticePath from_points(std::span<const Point> pts);
  /// Build from a step word over {'E','N'}.
  static LatticePath from_word(Point start, std::string_view word);

  [[nodiscard]] Point start() const { return start_; }
  [[nodiscard]] Point end() const;
  [[nodiscard]] const std::vector<Step> &steps() const { return steps_; }
  [[nodiscard]] std::size_t length() const { return steps_.size(); }
  [[nodiscard]] std::vector<Point> points() const;
  /// Step word over {'E','N'}.
  [[nodiscard]] std::string word() const;

  friend bool operator==(const LatticePath &, const LatticePath &) = default;

private:
  Point start_{};
  std::vector<Step> steps_;
};

/// Points where a North step is immediately followed by an East step,
/// in path order.
std::vector<Point> ne_turns(const LatticePath &path);

/// Every path point (x,y) has x >= s.x or y <= s.y.
bool weakly_southeast_of(const LatticePath &path, Point s);
/// Every path point (x,y) has x <= t.x or y >= t.y.
bool weakly_northwest_of(const LatticePath &path, Point t);

/// Point-level forms of the two predicates above.
constexpr bool point_southeast_of(Point p, Point s) {
  return p.x >= s.x || p.y <= s.y;
}
constexpr bool point_northwest_of(Point p, Point t) {
  return p.x <= t.x || p.y >= t.y;
}

/// How a segment between consecutive gates is laid out.
enum class SegmentShape {
  /// Flat segments (dx >= dy) run East first and then zig-zag; steep
  /// segments zig-zag first and then climb North.
  Staircase,
  /// Always zig-zag first, then finish with the straight run.
  ZigzagFirst,
};

/// Path from `from` through each gate in order to `to`, each segment being
/// a straight piece plus a zig-zag (N E)^k with k = min(dx, dy), so every
/// segment contributes k NE-turns strictly inside it.
/// Throws Infeasible if some consecutive pair has a negative displacement.
LatticePath zigzag_witness(Point from, Point to, std::span<const Point> gates,
                           SegmentShape shape = SegmentShape::Staircase);

/// Cogenerating bivector [u_1..u_n | v_1..v_n] with strictly increasing
/// positive entries.
///
/// Path i (1-based, top to bottom) runs from start(i) = (0, u_{n-i+1}-1) to
/// end(i) = (B - v_{n-i+1} + 1, A).
class Minor {
public:
  Minor(std::vector<int> u, std::vector<int> v);

  /// From start heights a_1 > ... > a_n and end gaps b_1 > ... > b_n,
  /// i.e. u_{n-i+1} = a_i + 1, v_{n-i+1} = b_i + 1.
  static Minor from_offsets(std::span<const int> a, std::span<const int> b);

  [[nodiscard]] int size() const { return static_cast<int>(u_.size()); }
  [[nodiscard]] const std::vector<int> &u() const { return u_; }
  [[nodiscard]] const std::vector<int> &v() const { return v_; }

  /// a_i = u_{n-i+1} - 1.
  [[nodiscard]] int start_height(int i) const;
  /// b_i = v_{n-i+1} - 1.
  [[nodiscard]] int end_gap(int i) const;
  [[nodiscard]] Point start(int i) const { return {0, start_height(i)}; }
  [[nodiscard]] Point end(int i, int A, int B) const {
    return {B - end_gap(i), A};
  }
  /// sum of u_i + v_i.
  [[nodiscard]] int weight() const;

  friend bool operator==(const Minor &, const Minor &) = default;

private:
  std::vector<int> u_;
  std::vector<int> v_;
};

} // namespace ladder
