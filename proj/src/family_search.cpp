#include "ladder/errors.hpp"
#include "ladder/turn_maximization.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace ladder {

namespace {

// Per path: column at the current level, or -1 while inactive, and whether
// the last step was North.
struct Slot {
  int x = -1;
  bool north = false;
  friend auto operator<=>(const Slot &, const Slot &) = default;
};
using State = std::vector<Slot>;

struct Node {
  State state;
  int value = 0;
  std::size_t parent = 0;
};

struct PathSpec {
  Point start;
  Point end;
};

} // namespace

std::vector<LatticePath>
best_family(const LadderRegion &region, const Minor &minor,
            const std::vector<std::vector<Point>> &allowed) {
  const int n = minor.size();
  const int A = region.max_y(), B = region.max_x();
  if (allowed.size() != static_cast<std::size_t>(n))
    throw InvalidInput("need one allowed-turn set per path");
  std::vector<PathSpec> spec;
  for (int i = 1; i <= n; ++i)
    spec.push_back({minor.start(i), minor.end(i, A, B)});

  int first = spec[0].start.level(), last = spec[0].end.level();
  for (const auto &p : spec) {
    first = std::min(first, p.start.level());
    last = std::max(last, p.end.level());
  }

  auto is_allowed = [&](std::size_t k, Point p) {
    return std::binary_search(allowed[k].begin(), allowed[k].end(), p);
  };
  // Paths start at their level, so a state at level `l` only needs the
  // paths whose level range covers l.
  auto enter = [&](State &s, int l) {
    for (std::size_t k = 0; k < spec.size(); ++k)
      if (spec[k].start.level() == l)
        s[k] = {spec[k].start.x, false};
  };
  auto disjoint = [](const State &s) {
    int prev = -1;
    for (const Slot &slot : s) {
      if (slot.x < 0)
        continue;
      if (slot.x <= prev)
        return false;
      prev = slot.x;
    }
    return true;
  };

  std::vector<std::vector<Node>> layers;
  {
    State s(spec.size());
    enter(s, first);
    layers.push_back({Node{s, 0, 0}});
  }
  for (int l = first; l < last; ++l) {
    std::map<State, std::size_t> index;
    std::vector<Node> next;
    const auto &layer = layers.back();
    for (std::size_t from = 0; from < layer.size(); ++from) {
      const Node &node = layer[from];
      std::vector<std::size_t> moving;
      for (std::size_t k = 0; k < spec.size(); ++k)
        if (node.state[k].x >= 0 && spec[k].end.level() > l)
          moving.push_back(k);
      for (unsigned mask = 0; mask < (1u << moving.size()); ++mask) {
        State s = node.state;
        int gain = 0;
        bool ok = true;
        for (std::size_t k = 0; k < spec.size() && ok; ++k)
          if (s[k].x >= 0 && spec[k].end.level() <= l)
            s[k] = {};
        for (std::size_t m = 0; m < moving.size() && ok; ++m) {
          const std::size_t k = moving[m];
          const Point p{s[k].x, l - s[k].x};
          const bool east = mask >> m & 1u;
          if (east && s[k].north) {
            if (!is_allowed(k, p))
              ok = false;
            ++gain;
          }
          const Point q = east ? p + Point{1, 0} : p + Point{0, 1};
          if (q.x > spec[k].end.x || q.y > spec[k].end.y ||
              !region.contains(q))
            ok = false;
          s[k] = {q.x, !east};
        }
        if (!ok)
          continue;
        enter(s, l + 1);
        if (!disjoint(s))
          continue;
        auto [it, fresh] = index.try_emplace(s, next.size());
        if (fresh)
          next.push_back(Node{s, node.value + gain, from});
        else if (node.value + gain > next[it->second].value)
          next[it->second] = Node{s, node.value + gain, from};
      }
    }
    if (next.empty())
      return {};
    layers.push_back(std::move(next));
  }

  // Every path has reached its end by the last level; pick the best node.
  const auto &tail = layers.back();
  std::size_t best = 0;
  for (std::size_t k = 1; k < tail.size(); ++k)
    if (tail[k].value > tail[best].value)
      best = k;

  std::vector<std::vector<Point>> trails(spec.size());
  std::size_t at = best;
  for (std::size_t depth = layers.size(); depth-- > 0;) {
    const Node &node = layers[depth][at];
    const int l = first + static_cast<int>(depth);
    for (std::size_t k = 0; k < spec.size(); ++k)
      if (node.state[k].x >= 0)
        trails[k].push_back({node.state[k].x, l - node.state[k].x});
    at = node.parent;
  }
  std::vector<LatticePath> family;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    std::reverse(trails[k].begin(), trails[k].end());
    family.push_back(LatticePath::from_points(trails[k]));
    if (family.back().start() != spec[k].start ||
        family.back().end() != spec[k].end)
      throw std::logic_error("family reconstruction missed an endpoint");
  }
  return family;
}

} // namespace ladder
