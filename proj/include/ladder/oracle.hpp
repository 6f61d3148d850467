#pragma once

#include "ladder/lattice_paths.hpp"
#include "ladder/polynomial.hpp"
#include "ladder/region.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <vector>

namespace ladder {

/// Limits on brute-force work. Exceeding either raises InstanceTooLarge.
struct OracleBudget {
  /// Longest admissible path, in unit steps.
  int max_steps = 26;
  /// Most joint states kept on one antidiagonal by gf_families.
  std::size_t max_states = 2'000'000;
};

using PointSet = std::set<Point>;

struct PathConstraint {
  Point start{};
  Point end{};
  /// Points where the path may turn; nullopt lets it turn anywhere.
  std::optional<PointSet> allowed_turns;
};

struct FamilyConstraint {
  std::vector<PathConstraint> paths;
  /// Require the paths to be pairwise vertex-disjoint.
  bool disjoint = true;
};

/// Calls `visit` on every path from start to end whose NE-turns all lie in
/// `allowed_turns` (any point if nullopt). Paths arrive East-first in
/// depth-first order.
void enumerate_paths(Point start, Point end,
                     const std::optional<PointSet> &allowed_turns,
                     const std::function<void(const LatticePath &)> &visit,
                     const OracleBudget &budget = {});

/// Sum of z^(total NE-turns) over all admissible families.
IntPolynomial gf_families(const FamilyConstraint &constraints,
                          const OracleBudget &budget = {});

/// Brute-force maximum of NE-turns outside `excluded` over paths from start
/// to end that stay weakly south-east of every se point and weakly
/// north-west of every nw point. Throws Infeasible if no path qualifies.
int max_ne_single(Point start, Point end, std::span<const Point> se,
                  std::span<const Point> nw, std::span<const Point> excluded,
                  const OracleBudget &budget = {});

/// The family constraints of the Hilbert-series path model: path i from
/// start(i) to end(i), turning only inside L^(i) minus B^(i).
FamilyConstraint theorem3_constraints(const LadderRegion &region,
                                      const Minor &minor);

} // namespace ladder
