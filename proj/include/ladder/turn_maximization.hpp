#pragma once

#include "ladder/lattice_paths.hpp"
#include "ladder/point.hpp"
#include "ladder/region.hpp"

#include <span>
#include <vector>

namespace ladder {

enum class GateLabel { S, T, Both };

/// A point in transformed coordinates (x+y, x-y).
struct GatePoint {
  int level = 0;
  int offset = 0;
  GateLabel label = GateLabel::S;

  static GatePoint from(Point p, GateLabel label) {
    return {p.level(), p.offset(), label};
  }
  [[nodiscard]] Point point() const {
    return {(level + offset) / 2, (level - offset) / 2};
  }
  friend bool operator==(const GatePoint &, const GatePoint &) = default;
};

struct SlalomTrace {
  Point start{};
  Point end{};
  /// Constraint points that survived normalisation; points outside the
  /// endpoint box that cannot touch any path are dropped.
  std::vector<Point> se;
  std::vector<Point> nw;
  /// Transformed and ordered point set: start first, end (label Both) last.
  std::vector<GatePoint> p2;
  /// Gates retained by the scan, start and end included.
  std::vector<GatePoint> p3;
  /// Every point that entered P3 at some time, in scan order. A point later
  /// replaced stays here.
  std::vector<GatePoint> chain;
  int max_turns = 0;
};

/// Maximal number of NE-turns of a path from a to b staying weakly
/// south-east of every se point: c - b - max(x - y) over se and both
/// endpoints. Throws InvalidInput if a point leaves the endpoint box.
int lemma1_max(Point a, Point b, std::span<const Point> se);

/// The constraint set of path i in the one-sided family problem:
/// {(i-j, a_j-i+j)}, {(B-b_j+i-j, A-i+j)} for j <= i and the corners
/// shifted by (i-1, 1-i). Sorted, duplicates removed.
std::vector<Point> lemma2_constraints(int i, const Minor &minor, int A, int B,
                                      std::span<const Point> upper_corners);

struct GateSets {
  std::vector<Point> se;
  std::vector<Point> nw;
};

/// Two-sided version: the endpoint terms stop at j = i-1, upper corners are
/// shifted by (i-1, 1-i), lower corners by (i-n, n-i). Sorted, no
/// duplicates.
GateSets lemma2b_constraints(int i, const Minor &minor, int A, int B,
                             std::span<const Point> upper_corners,
                             std::span<const Point> lower_corners);

/// Maximal number of NE-turns, not counting turns on nw points, of a path
/// from a to b that stays weakly south-east of every se point and weakly
/// north-west of every nw point. Throws Infeasible when no path exists.
SlalomTrace slalom_max(Point a, Point b, std::span<const Point> se,
                       std::span<const Point> nw);

/// A path realising trace.max_turns under the trace's constraints.
LatticePath slalom_witness(const SlalomTrace &trace);

/// Number of NE-turns of `path` that are not nw points.
int countable_turns(const LatticePath &path, std::span<const Point> nw);

struct FamilyMax {
  std::vector<int> t;
  int total = 0;
};

/// Closed form for one-sided ladders; a_i, b_i come from the minor and S
/// is the list of upper corners.
FamilyMax theorem1_family_max(const Minor &minor, int A, int B,
                              std::span<const Point> upper_corners);

struct TwoSidedMax {
  std::vector<int> t;
  std::vector<SlalomTrace> traces;
  int total = 0;
};

/// Runs the slalom scan once per path with the two-sided gate sets.
TwoSidedMax theorem2_family_max(const Minor &minor, int A, int B,
                                std::span<const Point> upper_corners,
                                std::span<const Point> lower_corners);

/// Non-intersecting paths inside the region, path i from start(i) to
/// end(i), all NE-turns in L^(i) minus B^(i), with as many turns in total
/// as theorem2_family_max predicts. Throws Infeasible if none exists and
/// std::logic_error if the best family falls short of the prediction.
std::vector<LatticePath> witness_family(const LadderRegion &region,
                                        const Minor &minor);

/// Max-plus search over non-intersecting families: the largest total of
/// NE-turns when path i must stay inside the region and turn only on
/// points of allowed[i]. Returns an empty vector if no family exists.
std::vector<LatticePath>
best_family(const LadderRegion &region, const Minor &minor,
            const std::vector<std::vector<Point>> &allowed);

namespace detail {

/// Gate order: level ascending; on a level T before S, S by offset
/// descending, T by offset ascending. `start` and `end` bracket the rest.
std::vector<GatePoint> order_gates(Point start, Point end,
                                   std::span<const Point> se,
                                   std::span<const Point> nw);

struct ScanResult {
  std::vector<GatePoint> p3;
  std::vector<GatePoint> chain;
};

/// The add/replace scan over an already ordered P2.
ScanResult scan(std::span<const GatePoint> p2);

/// Sum of min(dx, dy) between consecutive P3 points; throws Infeasible on a
/// negative term.
int turn_sum(std::span<const GatePoint> p3);

} // namespace detail

} // namespace ladder
