#include "ladder/region.hpp"

#include "ladder/errors.hpp"

#include <algorithm>
#include <set>

namespace ladder {

namespace {

void check_rows(int A, int B, const std::vector<RowInterval> &rows) {
  if (A < 0 || B < 0)
    throw InvalidInput("grid dimensions must be nonnegative");
  if (rows.size() != static_cast<std::size_t>(A) + 1)
    throw InvalidInput("expected " + std::to_string(A + 1) +
                       " row intervals, got " + std::to_string(rows.size()));
  for (int y = 0; y <= A; ++y) {
    const auto &r = rows[static_cast<std::size_t>(y)];
    if (r.lo < 0 || r.hi > B || r.lo > r.hi)
      throw InvalidInput("row " + std::to_string(y) + " interval [" +
                         std::to_string(r.lo) + "," + std::to_string(r.hi) +
                         "] is empty or outside [0," + std::to_string(B) +
                         "]");
    if (y > 0) {
      const auto &prev = rows[static_cast<std::size_t>(y - 1)];
      if (r.lo < prev.lo)
        throw InvalidInput("lo not monotone at row " + std::to_string(y));
      if (r.hi < prev.hi)
        throw InvalidInput("hi not monotone at row " + std::to_string(y));
      if (r.lo > prev.hi)
        throw InvalidInput("rows " + std::to_string(y - 1) + " and " +
                           std::to_string(y) + " share no column");
    }
  }
  if (rows.front().lo != 0)
    throw InvalidInput("column 0 is empty (row 0 must start at x = 0)");
  if (rows.back().hi != B)
    throw InvalidInput("column B is empty (row A must end at x = B)");
}

// Corner chains must increase strictly in both coordinates.
void check_chain(std::span<const Point> chain, const char *which) {
  for (std::size_t k = 1; k < chain.size(); ++k)
    if (!(chain[k].x > chain[k - 1].x && chain[k].y > chain[k - 1].y))
      throw InvalidInput(std::string(which) +
                         " corners must increase strictly in x and y: " +
                         to_string(chain[k - 1]) + " then " +
                         to_string(chain[k]));
}

} // namespace

LadderRegion LadderRegion::rectangle(int A, int B) {
  return from_row_intervals(
      A, B, std::vector<RowInterval>(static_cast<std::size_t>(A) + 1, {0, B}));
}

LadderRegion LadderRegion::from_row_intervals(int A, int B,
                                              std::vector<RowInterval> rows) {
  check_rows(A, B, rows);
  return LadderRegion(A, B, std::move(rows));
}

LadderRegion LadderRegion::from_corners(int A, int B,
                                        std::span<const Point> upper,
                                        std::span<const Point> lower) {
  if (A < 0 || B < 0)
    throw InvalidInput("grid dimensions must be nonnegative");
  check_chain(upper, "upper");
  check_chain(lower, "lower");
  for (Point c : upper)
    if (c.x < 1 || c.x > B || c.y < 0 || c.y > A - 1)
      throw InvalidInput("upper corner " + to_string(c) + " outside the grid");
  for (Point c : lower)
    if (c.x < 0 || c.x > B - 1 || c.y < 1 || c.y > A)
      throw InvalidInput("lower corner " + to_string(c) + " outside the grid");

  // An upper corner (x,y) makes lo jump to x at row y+1; a lower corner
  // (x,y) caps hi at x up to row y-1.
  std::vector<RowInterval> rows(static_cast<std::size_t>(A) + 1, {0, B});
  for (int y = 0; y <= A; ++y) {
    auto &r = rows[static_cast<std::size_t>(y)];
    for (Point c : upper)
      if (c.y < y)
        r.lo = c.x;
    for (auto it = lower.rbegin(); it != lower.rend(); ++it)
      if (it->y > y)
        r.hi = it->x;
  }
  LadderRegion region = from_row_intervals(A, B, std::move(rows));
  const auto got_upper = upper_inwards_corners(region);
  const auto got_lower = lower_inwards_corners(region);
  if (!std::equal(upper.begin(), upper.end(), got_upper.begin(),
                  got_upper.end()) ||
      !std::equal(lower.begin(), lower.end(), got_lower.begin(),
                  got_lower.end()))
    throw InvalidInput("upper and lower corner chains are inconsistent");
  return region;
}

RowInterval LadderRegion::row(int y) const {
  if (y < 0 || y > A_)
    throw InvalidInput("row index out of range");
  return rows_[static_cast<std::size_t>(y)];
}

bool LadderRegion::contains(Point p) const {
  if (p.y < 0 || p.y > A_)
    return false;
  const auto &r = rows_[static_cast<std::size_t>(p.y)];
  return p.x >= r.lo && p.x <= r.hi;
}

bool LadderRegion::is_upper() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [this](const RowInterval &r) { return r.hi == B_; });
}

bool LadderRegion::is_lower() const {
  return std::all_of(rows_.begin(), rows_.end(),
                     [](const RowInterval &r) { return r.lo == 0; });
}

std::vector<Point> LadderRegion::points() const {
  std::vector<Point> pts;
  for (int y = 0; y <= A_; ++y)
    for (int x = rows_[static_cast<std::size_t>(y)].lo;
         x <= rows_[static_cast<std::size_t>(y)].hi; ++x)
      pts.push_back({x, y});
  std::sort(pts.begin(), pts.end());
  return pts;
}

std::size_t LadderRegion::size() const {
  std::size_t n = 0;
  for (const auto &r : rows_)
    n += static_cast<std::size_t>(r.hi - r.lo + 1);
  return n;
}

LadderRegion LadderRegion::transposed() const {
  // (x,y) -> (A-y, B-x): new row y' = B-x collects the old column x, whose
  // rows form an interval [ylo, yhi]; those map to x' in [A-yhi, A-ylo].
  std::vector<RowInterval> rows(static_cast<std::size_t>(B_) + 1);
  for (int x = 0; x <= B_; ++x) {
    int ylo = A_ + 1, yhi = -1;
    for (int y = 0; y <= A_; ++y)
      if (contains({x, y})) {
        ylo = std::min(ylo, y);
        yhi = std::max(yhi, y);
      }
    rows[static_cast<std::size_t>(B_ - x)] = {A_ - yhi, A_ - ylo};
  }
  return from_row_intervals(B_, A_, std::move(rows));
}

std::vector<Point> upper_inwards_corners(const LadderRegion &region) {
  std::vector<Point> out;
  for (Point p : region.points())
    if (region.contains(p + Point{-1, 0}) && region.contains(p + Point{0, 1}) &&
        !region.contains(p + Point{-1, 1}))
      out.push_back(p);
  return out;
}

std::vector<Point> lower_inwards_corners(const LadderRegion &region) {
  std::vector<Point> out;
  for (Point p : region.points())
    if (region.contains(p + Point{1, 0}) && region.contains(p + Point{0, -1}) &&
        !region.contains(p + Point{1, -1}))
      out.push_back(p);
  return out;
}

void require_endpoints_in_region(const LadderRegion &region,
                                 const Minor &minor) {
  const int A = region.max_y(), B = region.max_x();
  for (int i = 1; i <= minor.size(); ++i) {
    if (!region.contains(minor.start(i)))
      throw AssumptionViolated("start point A^(" + std::to_string(i) + ") = " +
                               to_string(minor.start(i)) +
                               " lies outside the ladder");
    if (!region.contains(minor.end(i, A, B)))
      throw AssumptionViolated("end point E^(" + std::to_string(i) + ") = " +
                               to_string(minor.end(i, A, B)) +
                               " lies outside the ladder");
  }
}

namespace {

// B^(i) is a lattice path from s to e with one point per level.
bool traces_path(const std::vector<Point> &rim, Point s, Point e) {
  auto sorted = rim;
  std::sort(sorted.begin(), sorted.end(), [](Point a, Point b) {
    return a.level() < b.level();
  });
  if (sorted.empty() || sorted.front() != s || sorted.back() != e)
    return false;
  if (static_cast<int>(sorted.size()) != e.level() - s.level() + 1)
    return false;
  for (std::size_t k = 1; k < sorted.size(); ++k) {
    Point d = sorted[k] - sorted[k - 1];
    if (d != Point{1, 0} && d != Point{0, 1})
      return false;
  }
  return true;
}

} // namespace

Theorem3Data theorem3_data(const LadderRegion &region, const Minor &minor) {
  require_endpoints_in_region(region, minor);
  const int A = region.max_y(), B = region.max_x();
  const int n = minor.size();

  Theorem3Data data;
  data.regions.resize(static_cast<std::size_t>(n));
  data.boundaries.resize(static_cast<std::size_t>(n));

  std::set<Point> outer;
  for (Point p : region.points())
    outer.insert(p);

  std::set<Point> rims;
  for (int i = n; i >= 1; --i) {
    const Point s = minor.start(i);
    const Point e = minor.end(i, A, B);
    std::set<Point> inner;
    for (Point p : outer) {
      if (p.x > e.x || p.y < s.y)
        continue;
      // The innermost region is the ladder itself clipped to the box of
      // path n; every further region drops the previous rim.
      if (i < n && !outer.count(p + Point{1, -1}))
        continue;
      inner.insert(p);
    }
    std::vector<Point> rim;
    for (Point p : inner)
      if (!inner.count(p + Point{1, -1}))
        rim.push_back(p);
    auto k = static_cast<std::size_t>(i - 1);
    data.regions[k].assign(inner.begin(), inner.end());
    data.boundaries[k] = rim;
    rims.insert(rim.begin(), rim.end());
    outer = std::move(inner);
  }
  data.d = static_cast<int>(rims.size());

  data.boundaries_in_region = true;
  for (int i = 1; i <= n; ++i)
    if (!traces_path(data.boundaries[static_cast<std::size_t>(i - 1)],
                     minor.start(i), minor.end(i, A, B)))
      data.boundaries_in_region = false;
  data.d_matches_formula = data.d == (A + B + 3) * n - minor.weight();
  return data;
}

} // namespace ladder
