#include "ladder/turn_maximization.hpp"

#include "ladder/errors.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <set>
#include <stdexcept>

namespace ladder {

int lemma1_max(Point a, Point b, std::span<const Point> se) {
  if (a.x > b.x || a.y > b.y)
    throw InvalidInput("end point " + to_string(b) +
                       " is not north-east of start point " + to_string(a));
  int worst = std::max(a.offset(), b.offset());
  for (Point s : se) {
    if (s.x < a.x || s.x > b.x || s.y < a.y || s.y > b.y)
      throw InvalidInput("constraint point " + to_string(s) +
                         " lies outside the box spanned by " + to_string(a) +
                         " and " + to_string(b));
    worst = std::max(worst, s.offset());
  }
  return b.x - a.y - worst;
}

namespace {

void sort_unique(std::vector<Point> &pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

void check_path_index(int i, const Minor &minor) {
  if (i < 1 || i > minor.size())
    throw InvalidInput("path index " + std::to_string(i) + " outside 1.." +
                       std::to_string(minor.size()));
}

void add_endpoint_terms(std::vector<Point> &out, int i, int last_j,
                        const Minor &minor, int A, int B) {
  for (int j = 1; j <= last_j; ++j) {
    out.push_back({i - j, minor.start_height(j) - i + j});
    out.push_back({B - minor.end_gap(j) + i - j, A - i + j});
  }
}

} // namespace

std::vector<Point> lemma2_constraints(int i, const Minor &minor, int A, int B,
                                      std::span<const Point> upper_corners) {
  check_path_index(i, minor);
  std::vector<Point> out;
  add_endpoint_terms(out, i, i, minor, A, B);
  for (Point c : upper_corners)
    out.push_back(c + Point{i - 1, 1 - i});
  sort_unique(out);
  return out;
}

GateSets lemma2b_constraints(int i, const Minor &minor, int A, int B,
                             std::span<const Point> upper_corners,
                             std::span<const Point> lower_corners) {
  check_path_index(i, minor);
  const int n = minor.size();
  GateSets sets;
  add_endpoint_terms(sets.se, i, i - 1, minor, A, B);
  for (Point c : upper_corners)
    sets.se.push_back(c + Point{i - 1, 1 - i});
  for (Point d : lower_corners)
    sets.nw.push_back(d + Point{i - n, n - i});
  sort_unique(sets.se);
  sort_unique(sets.nw);
  return sets;
}

namespace detail {

std::vector<GatePoint> order_gates(Point start, Point end,
                                   std::span<const Point> se,
                                   std::span<const Point> nw) {
  std::vector<GatePoint> inner;
  for (Point s : se)
    inner.push_back(GatePoint::from(s, GateLabel::S));
  for (Point t : nw)
    inner.push_back(GatePoint::from(t, GateLabel::T));
  std::sort(inner.begin(), inner.end(),
            [](const GatePoint &p, const GatePoint &q) {
              if (p.level != q.level)
                return p.level < q.level;
              if (p.label != q.label)
                return p.label == GateLabel::T;
              return p.label == GateLabel::S ? p.offset > q.offset
                                             : p.offset < q.offset;
            });
  std::vector<GatePoint> p2;
  p2.reserve(inner.size() + 2);
  p2.push_back(GatePoint::from(start, GateLabel::S));
  p2.insert(p2.end(), inner.begin(), inner.end());
  p2.push_back(GatePoint::from(end, GateLabel::Both));
  return p2;
}

ScanResult scan(std::span<const GatePoint> p2) {
  if (p2.size() < 2)
    throw InvalidInput("slalom scan needs a start and an end point");
  ScanResult r;
  r.p3.push_back(p2.front());
  r.chain.push_back(p2.front());
  // The start point accepts both kinds of follower, like the end point does.
  bool at_start = true;
  for (std::size_t k = 1; k < p2.size(); ++k) {
    const GatePoint &u = p2[k];
    const GatePoint &c = r.p3.back();
    const bool last = k + 1 == p2.size();
    const bool s_hit = u.label != GateLabel::T && u.offset > c.offset;
    const bool t_hit = u.label != GateLabel::S && u.offset < c.offset;
    const bool c_is_s = !at_start && c.label == GateLabel::S;
    const bool c_is_t = !at_start && c.label == GateLabel::T;
    if ((s_hit && c_is_s) || (t_hit && c_is_t)) {
      r.p3.back() = u;
    } else if (s_hit || t_hit || last) {
      r.p3.push_back(u);
    } else {
      continue;
    }
    r.chain.push_back(u);
    at_start = false;
  }
  return r;
}

int turn_sum(std::span<const GatePoint> p3) {
  int twice = 0;
  for (std::size_t k = 1; k < p3.size(); ++k) {
    const GatePoint &p = p3[k - 1], &q = p3[k];
    const int dl = q.level - p.level, dof = q.offset - p.offset;
    const int term = std::min(dl + dof, dl - dof);
    if (term < 0)
      throw Infeasible("no path passes gate " + to_string(p.point()) +
                       " and then gate " + to_string(q.point()));
    const Point dp = q.point() - p.point();
    if (term != 2 * std::min(dp.x, dp.y))
      throw std::logic_error("turn term disagrees with min(dx, dy)");
    twice += term;
  }
  return twice / 2;
}

} // namespace detail

namespace {

// Bounds on the offset x - y at every level between the endpoints: se points
// give lower bounds, nw points upper bounds.
struct OffsetCorridor {
  int first_level = 0;
  std::vector<int> lo;
  std::vector<int> hi;

  [[nodiscard]] bool admits(Point p) const {
    auto k = static_cast<std::size_t>(p.level() - first_level);
    return p.offset() >= lo[k] && p.offset() <= hi[k];
  }
};

OffsetCorridor corridor(Point a, Point b, std::span<const Point> se,
                        std::span<const Point> nw) {
  OffsetCorridor c;
  c.first_level = a.level();
  const auto len = static_cast<std::size_t>(b.level() - a.level() + 1);
  c.lo.assign(len, std::numeric_limits<int>::min());
  c.hi.assign(len, std::numeric_limits<int>::max());
  // Box limits: a.x <= x <= b.x and a.y <= y <= b.y.
  for (std::size_t k = 0; k < len; ++k) {
    const int l = c.first_level + static_cast<int>(k);
    c.lo[k] = std::max(2 * a.x - l, l - 2 * b.y);
    c.hi[k] = std::min(2 * b.x - l, l - 2 * a.y);
  }
  for (Point s : se) {
    auto k = static_cast<std::size_t>(s.level() - c.first_level);
    c.lo[k] = std::max(c.lo[k], s.offset());
  }
  for (Point t : nw) {
    auto k = static_cast<std::size_t>(t.level() - c.first_level);
    c.hi[k] = std::min(c.hi[k], t.offset());
  }
  return c;
}

// Forward sweep: the offsets reachable at each level form an interval of
// one parity, so tracking its two ends decides whether any path exists.
bool reachable(const OffsetCorridor &c, Point a, Point b) {
  int lo = a.offset(), hi = a.offset();
  if (!c.admits(a))
    return false;
  for (std::size_t k = 1; k < c.lo.size(); ++k) {
    int nlo = std::max(lo - 1, c.lo[k]);
    int nhi = std::min(hi + 1, c.hi[k]);
    const int l = c.first_level + static_cast<int>(k);
    // Offsets share the parity of the level.
    if ((nlo - l) % 2 != 0)
      ++nlo;
    if ((nhi - l) % 2 != 0)
      --nhi;
    if (nlo > nhi)
      return false;
    lo = nlo;
    hi = nhi;
  }
  return b.offset() >= lo && b.offset() <= hi;
}

// Drops constraint points that no path between the endpoints can violate
// and rejects those that every such path violates.
void normalise(Point a, Point b, std::span<const Point> se,
               std::span<const Point> nw, SlalomTrace &trace) {
  for (Point s : se) {
    if (s.x <= a.x || s.y >= b.y)
      continue;
    if (s.y < a.y || s.x > b.x)
      throw Infeasible("no path from " + to_string(a) + " to " + to_string(b) +
                       " stays south-east of " + to_string(s));
    trace.se.push_back(s);
  }
  for (Point t : nw) {
    if (t.x >= b.x || t.y <= a.y)
      continue;
    if (t.x < a.x || t.y > b.y)
      throw Infeasible("no path from " + to_string(a) + " to " + to_string(b) +
                       " stays north-west of " + to_string(t));
    trace.nw.push_back(t);
  }
  sort_unique(trace.se);
  sort_unique(trace.nw);
}

} // namespace

SlalomTrace slalom_max(Point a, Point b, std::span<const Point> se,
                       std::span<const Point> nw) {
  if (a.x > b.x || a.y > b.y)
    throw InvalidInput("end point " + to_string(b) +
                       " is not north-east of start point " + to_string(a));
  SlalomTrace trace;
  trace.start = a;
  trace.end = b;
  normalise(a, b, se, nw, trace);
  if (!reachable(corridor(a, b, trace.se, trace.nw), a, b))
    throw Infeasible("no path from " + to_string(a) + " to " + to_string(b) +
                     " passes all gates");
  trace.p2 = detail::order_gates(a, b, trace.se, trace.nw);
  auto scanned = detail::scan(trace.p2);
  trace.p3 = std::move(scanned.p3);
  trace.chain = std::move(scanned.chain);
  trace.max_turns = detail::turn_sum(trace.p3);
  return trace;
}

int countable_turns(const LatticePath &path, std::span<const Point> nw) {
  int count = 0;
  for (Point p : ne_turns(path))
    if (std::find(nw.begin(), nw.end(), p) == nw.end())
      ++count;
  return count;
}

namespace {

bool satisfies(const LatticePath &path, const SlalomTrace &trace) {
  if (path.start() != trace.start || path.end() != trace.end)
    return false;
  for (Point s : trace.se)
    if (!weakly_southeast_of(path, s))
      return false;
  for (Point t : trace.nw)
    if (!weakly_northwest_of(path, t))
      return false;
  return true;
}

// Exact single-path optimum by dynamic programming over levels; state is
// the column and whether the last step was North.
LatticePath best_single_path(const SlalomTrace &trace, int &best) {
  const Point a = trace.start, b = trace.end;
  const OffsetCorridor c = corridor(a, b, trace.se, trace.nw);
  const std::set<Point> uncounted(trace.nw.begin(), trace.nw.end());
  const int width = b.x - a.x + 1;
  const int levels = b.level() - a.level() + 1;
  constexpr int none = std::numeric_limits<int>::min();
  using Cell = std::array<int, 2>;
  std::vector<std::vector<Cell>> value(
      static_cast<std::size_t>(levels),
      std::vector<Cell>(static_cast<std::size_t>(width), Cell{none, none}));
  auto at = [&](int k, int x, int north) -> int & {
    return value[static_cast<std::size_t>(k)][static_cast<std::size_t>(
        x - a.x)][static_cast<std::size_t>(north)];
  };
  at(0, a.x, 0) = 0;
  for (int k = 0; k + 1 < levels; ++k) {
    const int l = a.level() + k;
    for (int x = a.x; x <= b.x; ++x)
      for (int north = 0; north < 2; ++north) {
        const int v = at(k, x, north);
        if (v == none)
          continue;
        const Point p{x, l - x};
        const Point east = p + Point{1, 0}, up = p + Point{0, 1};
        if (east.x <= b.x && c.admits(east)) {
          const int gain = north && !uncounted.count(p) ? 1 : 0;
          at(k + 1, east.x, 0) = std::max(at(k + 1, east.x, 0), v + gain);
        }
        if (up.y <= b.y && c.admits(up))
          at(k + 1, x, 1) = std::max(at(k + 1, x, 1), v);
      }
  }
  const int last = levels - 1;
  best = std::max(at(last, b.x, 0), at(last, b.x, 1));
  if (best == none)
    throw Infeasible("no path from " + to_string(a) + " to " + to_string(b) +
                     " passes all gates");
  // Walk back choosing any predecessor consistent with the optimum.
  std::vector<Step> steps(static_cast<std::size_t>(last));
  int x = b.x;
  int north = at(last, b.x, 1) == best ? 1 : 0;
  int v = best;
  for (int k = last; k > 0; --k) {
    steps[static_cast<std::size_t>(k - 1)] = north ? Step::North : Step::East;
    const int px = north ? x : x - 1;
    const Point p{px, a.level() + k - 1 - px};
    int found = -1;
    for (int pn = 0; pn < 2 && found < 0; ++pn) {
      const int pv = at(k - 1, px, pn);
      if (pv == none)
        continue;
      const int gain = !north && pn && !uncounted.count(p) ? 1 : 0;
      if (pv + gain == v)
        found = pn;
    }
    if (found < 0)
      throw std::logic_error("single-path reconstruction lost its way");
    if (!north && found && !uncounted.count(p))
      --v;
    x = px;
    north = found;
  }
  return LatticePath(a, std::move(steps));
}

} // namespace

LatticePath slalom_witness(const SlalomTrace &trace) {
  // First the construction through the retained gates; the exact search
  // takes over where the zig-zags collide with a gate.
  std::vector<Point> gates;
  for (std::size_t k = 1; k + 1 < trace.chain.size(); ++k)
    gates.push_back(trace.chain[k].point());
  try {
    LatticePath path = zigzag_witness(trace.start, trace.end, gates,
                                      SegmentShape::ZigzagFirst);
    if (satisfies(path, trace) &&
        countable_turns(path, trace.nw) == trace.max_turns)
      return path;
  } catch (const Infeasible &) {
  }
  int best = 0;
  LatticePath path = best_single_path(trace, best);
  if (best != trace.max_turns)
    throw std::logic_error("slalom maximum " +
                           std::to_string(trace.max_turns) +
                           " differs from exact optimum " +
                           std::to_string(best));
  return path;
}

FamilyMax theorem1_family_max(const Minor &minor, int A, int B,
                              std::span<const Point> upper_corners) {
  FamilyMax out;
  const int n = minor.size();
  for (int i = 1; i <= n; ++i) {
    int worst = std::numeric_limits<int>::min();
    for (int j = 1; j <= i; ++j) {
      worst = std::max(worst, -minor.start_height(j) + 2 * (i - j));
      worst = std::max(worst, B - A - minor.end_gap(j) + 2 * (i - j));
    }
    for (Point s : upper_corners)
      worst = std::max(worst, s.offset() + 2 * (i - 1));
    const int t = B - minor.start_height(i) - minor.end_gap(i) - worst;
    out.t.push_back(t);
    out.total += t;
  }
  return out;
}

TwoSidedMax theorem2_family_max(const Minor &minor, int A, int B,
                                std::span<const Point> upper_corners,
                                std::span<const Point> lower_corners) {
  TwoSidedMax out;
  for (int i = 1; i <= minor.size(); ++i) {
    auto gates =
        lemma2b_constraints(i, minor, A, B, upper_corners, lower_corners);
    auto trace =
        slalom_max(minor.start(i), minor.end(i, A, B), gates.se, gates.nw);
    out.t.push_back(trace.max_turns);
    out.total += trace.max_turns;
    out.traces.push_back(std::move(trace));
  }
  return out;
}

namespace {

bool valid_family(const std::vector<LatticePath> &family,
                  const LadderRegion &region,
                  const std::vector<std::vector<Point>> &allowed) {
  std::set<Point> used;
  for (std::size_t k = 0; k < family.size(); ++k) {
    for (Point p : family[k].points()) {
      if (!region.contains(p) || !used.insert(p).second)
        return false;
    }
    for (Point p : ne_turns(family[k]))
      if (!std::binary_search(allowed[k].begin(), allowed[k].end(), p))
        return false;
  }
  return true;
}

} // namespace

std::vector<LatticePath> witness_family(const LadderRegion &region,
                                        const Minor &minor) {
  const int A = region.max_y(), B = region.max_x();
  const auto data = theorem3_data(region, minor);
  const auto upper = upper_inwards_corners(region);
  const auto lower = lower_inwards_corners(region);
  const auto predicted = theorem2_family_max(minor, A, B, upper, lower);

  std::vector<std::vector<Point>> allowed;
  for (std::size_t k = 0; k < data.regions.size(); ++k) {
    std::vector<Point> inner;
    std::set_difference(data.regions[k].begin(), data.regions[k].end(),
                        data.boundaries[k].begin(), data.boundaries[k].end(),
                        std::back_inserter(inner));
    allowed.push_back(std::move(inner));
  }

  std::vector<LatticePath> family;
  int total = 0;
  for (const auto &trace : predicted.traces) {
    family.push_back(slalom_witness(trace));
    total += static_cast<int>(ne_turns(family.back()).size());
  }
  if (total == predicted.total && valid_family(family, region, allowed))
    return family;

  family = best_family(region, minor, allowed);
  if (family.empty())
    throw Infeasible("no non-intersecting family fits the ladder");
  total = 0;
  for (const auto &path : family)
    total += static_cast<int>(ne_turns(path).size());
  if (total != predicted.total)
    throw std::logic_error("best family has " + std::to_string(total) +
                           " NE-turns, prediction was " +
                           std::to_string(predicted.total));
  return family;
}

} // namespace ladder
