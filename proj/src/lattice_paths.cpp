#include "ladder/lattice_paths.hpp"

#include "ladder/errors.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace ladder {

std::ostream &operator<<(std::ostream &os, Point p) {
  return os << '(' << p.x << ',' << p.y << ')';
}

std::string to_string(Point p) {
  std::ostringstream os;
  os << p;
  return os.str();
}

std::string to_string(const std::vector<Point> &pts) {
  std::ostringstream os;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    if (k)
      os << ',';
    os << pts[k];
  }
  return os.str();
}

LatticePath::LatticePath(Point start, std::vector<Step> steps)
    : start_(start), steps_(std::move(steps)) {}

LatticePath LatticePath::from_points(std::span<const Point> pts) {
  if (pts.empty())
    throw InvalidInput("lattice path needs at least one point");
  std::vector<Step> steps;
  steps.reserve(pts.size() - 1);
  for (std::size_t k = 1; k < pts.size(); ++k) {
    Point d = pts[k] - pts[k - 1];
    if (d == Point{1, 0})
      steps.push_back(Step::East);
    else if (d == Point{0, 1})
      steps.push_back(Step::North);
    else
      throw InvalidInput("non-unit step from " + to_string(pts[k - 1]) +
                         " to " + to_string(pts[k]));
  }
  return LatticePath(pts.front(), std::move(steps));
}

LatticePath LatticePath::from_word(Point start, std::string_view word) {
  std::vector<Step> steps;
  steps.reserve(word.size());
  for (char c : word) {
    if (c == 'E')
      steps.push_back(Step::East);
    else if (c == 'N')
      steps.push_back(Step::North);
    else
      throw InvalidInput(std::string("bad step letter '") + c + "'");
  }
  return LatticePath(start, std::move(steps));
}

Point LatticePath::end() const {
  auto east = std::count(steps_.begin(), steps_.end(), Step::East);
  auto north = static_cast<std::ptrdiff_t>(steps_.size()) - east;
  return start_ + Point{static_cast<int>(east), static_cast<int>(north)};
}

std::vector<Point> LatticePath::points() const {
  std::vector<Point> pts;
  pts.reserve(steps_.size() + 1);
  Point p = start_;
  pts.push_back(p);
  for (Step s : steps_) {
    p = p + (s == Step::East ? Point{1, 0} : Point{0, 1});
    pts.push_back(p);
  }
  return pts;
}

std::string LatticePath::word() const {
  std::string w;
  w.reserve(steps_.size());
  for (Step s : steps_)
    w.push_back(s == Step::East ? 'E' : 'N');
  return w;
}

std::vector<Point> ne_turns(const LatticePath &path) {
  std::vector<Point> turns;
  const auto &steps = path.steps();
  Point p = path.start();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    p = p + (steps[k] == Step::East ? Point{1, 0} : Point{0, 1});
    if (steps[k] == Step::North && k + 1 < steps.size() &&
        steps[k + 1] == Step::East)
      turns.push_back(p);
  }
  return turns;
}

bool weakly_southeast_of(const LatticePath &path, Point s) {
  auto pts = path.points();
  return std::all_of(pts.begin(), pts.end(),
                     [s](Point p) { return point_southeast_of(p, s); });
}

bool weakly_northwest_of(const LatticePath &path, Point t) {
  auto pts = path.points();
  return std::all_of(pts.begin(), pts.end(),
                     [t](Point p) { return point_northwest_of(p, t); });
}

namespace {

void append(std::vector<Step> &steps, Step s, int count) {
  steps.insert(steps.end(), static_cast<std::size_t>(count), s);
}

void append_zigzag(std::vector<Step> &steps, int pairs) {
  for (int k = 0; k < pairs; ++k) {
    steps.push_back(Step::North);
    steps.push_back(Step::East);
  }
}

void append_segment(std::vector<Step> &steps, Point from, Point to,
                    SegmentShape shape) {
  int dx = to.x - from.x;
  int dy = to.y - from.y;
  if (dx < 0 || dy < 0)
    throw Infeasible("gate " + to_string(to) + " is not north-east of " +
                     to_string(from));
  if (dx >= dy) {
    if (shape == SegmentShape::Staircase) {
      append(steps, Step::East, dx - dy);
      append_zigzag(steps, dy);
    } else {
      append_zigzag(steps, dy);
      append(steps, Step::East, dx - dy);
    }
  } else {
    append_zigzag(steps, dx);
    append(steps, Step::North, dy - dx);
  }
}

} // namespace

LatticePath zigzag_witness(Point from, Point to, std::span<const Point> gates,
                           SegmentShape shape) {
  std::vector<Step> steps;
  Point cur = from;
  for (Point g : gates) {
    append_segment(steps, cur, g, shape);
    cur = g;
  }
  append_segment(steps, cur, to, shape);
  return LatticePath(from, std::move(steps));
}

Minor::Minor(std::vector<int> u, std::vector<int> v)
    : u_(std::move(u)), v_(std::move(v)) {
  if (u_.empty())
    throw InvalidInput("minor must have at least one row index");
  if (u_.size() != v_.size())
    throw InvalidInput("u and v must have the same length");
  auto check = [](const std::vector<int> &w, const char *name) {
    for (std::size_t k = 0; k < w.size(); ++k) {
      if (w[k] < 1)
        throw InvalidInput(std::string(name) + " entries must be positive");
      if (k > 0 && w[k] <= w[k - 1])
        throw InvalidInput(std::string(name) + " must be strictly increasing");
    }
  };
  check(u_, "u");
  check(v_, "v");
}

Minor Minor::from_offsets(std::span<const int> a, std::span<const int> b) {
  std::vector<int> u(a.rbegin(), a.rend());
  std::vector<int> v(b.rbegin(), b.rend());
  for (int &x : u)
    ++x;
  for (int &x : v)
    ++x;
  return Minor(std::move(u), std::move(v));
}

int Minor::start_height(int i) const {
  if (i < 1 || i > size())
    throw InvalidInput("path index out of range");
  return u_[static_cast<std::size_t>(size() - i)] - 1;
}

int Minor::end_gap(int i) const {
  if (i < 1 || i > size())
    throw InvalidInput("path index out of range");
  return v_[static_cast<std::size_t>(size() - i)] - 1;
}

int Minor::weight() const {
  int w = 0;
  for (std::size_t k = 0; k < u_.size(); ++k)
    w += u_[k] + v_[k];
  return w;
}

} // namespace ladder
