#pragma once

#include "ladder/lattice_paths.hpp"
#include "ladder/point.hpp"

#include <compare>
#include <span>
#include <vector>

namespace ladder {

struct RowInterval {
  int lo = 0;
  int hi = 0;
  friend constexpr auto operator<=>(const RowInterval &,
                                    const RowInterval &) = default;
};

/// A ladder region inside the grid [0,B] x [0,A], stored row by row.
///
/// Row y holds the columns lo_y..hi_y. Both lo and hi are non-decreasing
/// in y, which is exactly the rectangle-completion property of a ladder.
/// Only reduced, connected ladders are represented: every row is nonempty,
/// column 0 meets row 0 (lo_0 = 0), column B meets row A (hi_A = B) and
/// consecutive rows share a column (lo_{y+1} <= hi_y). The inwards corners
/// then determine the region.
class LadderRegion {
public:
  static LadderRegion rectangle(int A, int B);
  static LadderRegion from_row_intervals(int A, int B,
                                         std::vector<RowInterval> rows);
  /// The unique region whose inwards corners are exactly the given ones.
  static LadderRegion from_corners(int A, int B, std::span<const Point> upper,
                                   std::span<const Point> lower);

  [[nodiscard]] int max_y() const { return A_; }
  [[nodiscard]] int max_x() const { return B_; }
  [[nodiscard]] RowInterval row(int y) const;
  [[nodiscard]] const std::vector<RowInterval> &rows() const { return rows_; }
  [[nodiscard]] bool contains(Point p) const;

  /// hi_y = B on every row (contains the bottom-right corner (B,0)).
  [[nodiscard]] bool is_upper() const;
  /// lo_y = 0 on every row (contains the top-left corner (0,A)).
  [[nodiscard]] bool is_lower() const;
  [[nodiscard]] bool is_rectangle() const { return is_upper() && is_lower(); }

  /// All points, ordered by (x, y).
  [[nodiscard]] std::vector<Point> points() const;
  [[nodiscard]] std::size_t size() const;

  /// Image under (x,y) -> (A-y, B-x), i.e. the region of the transposed
  /// matrix; A and B trade places.
  [[nodiscard]] LadderRegion transposed() const;

  friend bool operator==(const LadderRegion &, const LadderRegion &) = default;

private:
  LadderRegion(int A, int B, std::vector<RowInterval> rows)
      : A_(A), B_(B), rows_(std::move(rows)) {}

  int A_ = 0;
  int B_ = 0;
  std::vector<RowInterval> rows_;
};

/// (x,y) in L with (x-1,y), (x,y+1) in L and (x-1,y+1) not in L; sorted by x.
std::vector<Point> upper_inwards_corners(const LadderRegion &region);
/// (x,y) in L with (x+1,y), (x,y-1) in L and (x+1,y-1) not in L; sorted by x.
std::vector<Point> lower_inwards_corners(const LadderRegion &region);

/// Boundary data of the Hilbert-series path model for a region and minor.
///
/// Index k holds the data of path i = k+1. The regions L^(i) shrink from
/// L^(n) (the ladder clipped to the box of path n) inwards: each step keeps
/// the points whose south-east diagonal neighbour survived. B^(i) is the
/// lower-right rim of L^(i), the points whose south-east neighbour is
/// missing.
struct Theorem3Data {
  std::vector<std::vector<Point>> regions;    // L^(i), sorted
  std::vector<std::vector<Point>> boundaries; // B^(i), sorted
  /// |union of B^(i)|.
  int d = 0;
  /// Every B^(i) traces a complete lattice path from start(i) to end(i)
  /// inside L (so |B^(i)| = E1-A1+E2-A2+1).
  bool boundaries_in_region = false;
  /// d == (A+B+3)n - sum(u_i + v_i).
  bool d_matches_formula = false;
};

/// Throws AssumptionViolated if a path endpoint lies outside the region.
Theorem3Data theorem3_data(const LadderRegion &region, const Minor &minor);

/// Throws AssumptionViolated naming the first endpoint outside the region.
void require_endpoints_in_region(const LadderRegion &region,
                                 const Minor &minor);

} // namespace ladder
