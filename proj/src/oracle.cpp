#include "ladder/oracle.hpp"

#include "ladder/errors.hpp"

#include <algorithm>
#include <map>

namespace ladder {

namespace {

void check_budget(Point start, Point end, const OracleBudget &budget) {
  if (end.x < start.x || end.y < start.y)
    throw InvalidInput("end point " + to_string(end) +
                       " is not north-east of start point " + to_string(start));
  const int steps = end.x - start.x + end.y - start.y;
  if (steps > budget.max_steps)
    throw InstanceTooLarge("path from " + to_string(start) + " to " +
                           to_string(end) + " needs " + std::to_string(steps) +
                           " steps, budget is " +
                           std::to_string(budget.max_steps));
}

struct Walker {
  Point end;
  const std::optional<PointSet> &allowed;
  const std::function<void(const LatticePath &)> &visit;
  Point start;
  std::vector<Step> steps;

  void run(Point p) {
    if (p == end) {
      visit(LatticePath(start, steps));
      return;
    }
    const bool after_north = !steps.empty() && steps.back() == Step::North;
    if (p.x < end.x &&
        (!after_north || !allowed || allowed->count(p))) {
      steps.push_back(Step::East);
      run(p + Point{1, 0});
      steps.pop_back();
    }
    if (p.y < end.y) {
      steps.push_back(Step::North);
      run(p + Point{0, 1});
      steps.pop_back();
    }
  }
};

} // namespace

void enumerate_paths(Point start, Point end,
                     const std::optional<PointSet> &allowed_turns,
                     const std::function<void(const LatticePath &)> &visit,
                     const OracleBudget &budget) {
  check_budget(start, end, budget);
  Walker w{end, allowed_turns, visit, start, {}};
  w.run(start);
}

IntPolynomial gf_families(const FamilyConstraint &constraints,
                          const OracleBudget &budget) {
  const auto &paths = constraints.paths;
  if (paths.empty())
    return IntPolynomial::constant(1);
  int first = paths[0].start.level(), last = paths[0].end.level();
  for (const auto &p : paths) {
    check_budget(p.start, p.end, budget);
    first = std::min(first, p.start.level());
    last = std::max(last, p.end.level());
  }

  // Joint state on one antidiagonal: per path its column and whether its
  // last step was North; paths not on the antidiagonal are inactive.
  struct Slot {
    bool active = false;
    int x = 0;
    bool north = false;
    auto operator<=>(const Slot &) const = default;
  };
  using State = std::vector<Slot>;
  auto enter = [&](State &s, int l) {
    for (std::size_t k = 0; k < paths.size(); ++k)
      if (paths[k].start.level() == l)
        s[k] = {true, paths[k].start.x, false};
  };
  auto clash = [&](const State &s) {
    if (!constraints.disjoint)
      return false;
    std::vector<int> cols;
    for (const Slot &slot : s)
      if (slot.active)
        cols.push_back(slot.x);
    std::sort(cols.begin(), cols.end());
    return std::adjacent_find(cols.begin(), cols.end()) != cols.end();
  };

  std::map<State, IntPolynomial> layer;
  {
    State s(paths.size());
    enter(s, first);
    if (clash(s))
      return {};
    layer.emplace(std::move(s), IntPolynomial::constant(1));
  }
  for (int l = first; l < last; ++l) {
    std::map<State, IntPolynomial> next;
    for (const auto &[state, weight] : layer) {
      std::vector<std::size_t> moving;
      State base = state;
      for (std::size_t k = 0; k < paths.size(); ++k) {
        if (!base[k].active)
          continue;
        if (paths[k].end.level() == l)
          base[k] = {};
        else
          moving.push_back(k);
      }
      for (unsigned mask = 0; mask < (1u << moving.size()); ++mask) {
        State s = base;
        int turns = 0;
        bool ok = true;
        for (std::size_t m = 0; m < moving.size() && ok; ++m) {
          const std::size_t k = moving[m];
          const Point p{state[k].x, l - state[k].x};
          const bool east = mask >> m & 1u;
          if (east && state[k].north) {
            const auto &allowed = paths[k].allowed_turns;
            if (allowed && !allowed->count(p))
              ok = false;
            ++turns;
          }
          const Point q = east ? p + Point{1, 0} : p + Point{0, 1};
          if (q.x > paths[k].end.x || q.y > paths[k].end.y)
            ok = false;
          s[k] = {true, q.x, !east};
        }
        if (!ok)
          continue;
        enter(s, l + 1);
        if (clash(s))
          continue;
        next[s] += weight.shifted(turns);
      }
    }
    if (next.size() > budget.max_states)
      throw InstanceTooLarge("family search exceeded " +
                             std::to_string(budget.max_states) +
                             " joint states");
    layer = std::move(next);
  }
  IntPolynomial total;
  for (const auto &entry : layer)
    total += entry.second;
  return total;
}

namespace {

struct SingleSearch {
  Point end;
  std::span<const Point> se;
  std::span<const Point> nw;
  std::span<const Point> excluded;
  int best = -1;

  [[nodiscard]] bool admissible(Point p) const {
    return std::all_of(se.begin(), se.end(),
                       [p](Point s) { return point_southeast_of(p, s); }) &&
           std::all_of(nw.begin(), nw.end(),
                       [p](Point t) { return point_northwest_of(p, t); });
  }

  void run(Point p, bool after_north, int turns) {
    if (!admissible(p))
      return;
    if (p == end) {
      best = std::max(best, turns);
      return;
    }
    if (p.x < end.x) {
      const bool counted =
          after_north &&
          std::find(excluded.begin(), excluded.end(), p) == excluded.end();
      run(p + Point{1, 0}, false, turns + (counted ? 1 : 0));
    }
    if (p.y < end.y)
      run(p + Point{0, 1}, true, turns);
  }
};

} // namespace

int max_ne_single(Point start, Point end, std::span<const Point> se,
                  std::span<const Point> nw, std::span<const Point> excluded,
                  const OracleBudget &budget) {
  check_budget(start, end, budget);
  SingleSearch search{end, se, nw, excluded};
  search.run(start, false, 0);
  if (search.best < 0)
    throw Infeasible("no path from " + to_string(start) + " to " +
                     to_string(end) + " satisfies the side constraints");
  return search.best;
}

FamilyConstraint theorem3_constraints(const LadderRegion &region,
                                      const Minor &minor) {
  const auto data = theorem3_data(region, minor);
  FamilyConstraint fc;
  for (int i = 1; i <= minor.size(); ++i) {
    const auto k = static_cast<std::size_t>(i - 1);
    PointSet allowed(data.regions[k].begin(), data.regions[k].end());
    for (Point p : data.boundaries[k])
      allowed.erase(p);
    fc.paths.push_back({minor.start(i),
                        minor.end(i, region.max_y(), region.max_x()),
                        std::move(allowed)});
  }
  return fc;
}

} // namespace ladder
