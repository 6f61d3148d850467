#include "ladder/errors.hpp"
#include "ladder/oracle.hpp"
#include "ladder/turn_maximization.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace ladder;

namespace {

int count_paths(Point a, Point b, const std::optional<PointSet> &allowed) {
  int n = 0;
  enumerate_paths(a, b, allowed, [&](const LatticePath &) { ++n; });
  return n;
}

long long choose(int n, int k) {
  if (k < 0 || k > n)
    return 0;
  long long r = 1;
  for (int j = 1; j <= k; ++j)
    r = r * (n - k + j) / j;
  return r;
}

// Families by nested enumeration: every tuple of admissible paths, kept
// when no two share a point.
IntPolynomial gf_by_tuples(const FamilyConstraint &fc) {
  IntPolynomial gf;
  std::vector<LatticePath> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == fc.paths.size()) {
      std::set<Point> used;
      int turns = 0;
      for (const auto &p : chosen) {
        for (Point q : p.points())
          if (fc.disjoint && !used.insert(q).second)
            return;
        turns += static_cast<int>(ne_turns(p).size());
      }
      gf.add_term(1, turns);
      return;
    }
    const auto &pc = fc.paths[k];
    enumerate_paths(pc.start, pc.end, pc.allowed_turns,
                    [&](const LatticePath &p) {
                      chosen.push_back(p);
                      rec(k + 1);
                      chosen.pop_back();
                    });
  };
  rec(0);
  return gf;
}

const std::vector<Point> fig7_se{{2, 2}, {4, 3}, {2, 5}, {8, 9}, {10, 10},
                                 {11, 11}};
const std::vector<Point> fig7_nw{{4, 1}, {5, 1},  {6, 1},  {5, 2}, {5, 5},
                                 {5, 6}, {8, 7},  {11, 9}, {13, 10}};

} // namespace

TEST_CASE("enumerate_paths counts") {
  CHECK(count_paths({0, 0}, {1, 1}, std::nullopt) == 2);
  // Only EENN avoids a North step followed by an East step.
  CHECK(count_paths({0, 0}, {2, 2}, PointSet{}) == 1);
  for (int m = 0; m <= 6; ++m)
    CHECK(count_paths({0, 0}, {m, 0}, PointSet{}) == 1);
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b)
      CHECK(count_paths({1, -1}, {1 + a, -1 + b}, std::nullopt) ==
            choose(a + b, a));
}

TEST_CASE("enumerate_paths goes East first and respects allowed turns") {
  std::vector<std::string> words;
  enumerate_paths({0, 0}, {2, 1}, std::nullopt,
                  [&](const LatticePath &p) { words.push_back(p.word()); });
  CHECK(words == std::vector<std::string>{"EEN", "ENE", "NEE"});

  const PointSet only{{0, 1}};
  enumerate_paths({0, 0}, {3, 3}, only, [&](const LatticePath &p) {
    for (Point t : ne_turns(p))
      CHECK(t == Point{0, 1});
  });
}

TEST_CASE("enumerate_paths enforces the step budget") {
  auto none = [](const LatticePath &) {};
  CHECK_THROWS_AS(enumerate_paths({0, 0}, {14, 13}, std::nullopt, none),
                  InstanceTooLarge);
  OracleBudget small;
  small.max_steps = 4;
  CHECK_THROWS_AS(enumerate_paths({0, 0}, {3, 2}, std::nullopt, none, small),
                  InstanceTooLarge);
  CHECK_THROWS_AS(enumerate_paths({2, 0}, {1, 3}, std::nullopt, none),
                  InvalidInput);
}

TEST_CASE("single unconstrained path: turn counts are C(a,k) C(b,k)") {
  for (int a = 0; a <= 7; ++a)
    for (int b = 0; b <= 7; ++b) {
      FamilyConstraint fc{{{{0, 0}, {a, b}, std::nullopt}}};
      auto gf = gf_families(fc);
      for (int k = 0; k <= std::min(a, b); ++k)
        CHECK(gf.coefficient(k) == BigInt(choose(a, k) * choose(b, k)));
      CHECK(gf.degree() == std::min(a, b));
    }
}

TEST_CASE("gf_families examples") {
  SUBCASE("two by two grid") {
    auto fc = theorem3_constraints(LadderRegion::rectangle(1, 1),
                                   Minor({1}, {1}));
    CHECK(gf_families(fc) == IntPolynomial(std::vector<BigInt>{1, 1}));
  }
  SUBCASE("a single forced family") {
    // The lower path is pinned to row 0, the upper one is free.
    FamilyConstraint fc{{{{0, 1}, {2, 2}, std::nullopt},
                         {{0, 0}, {2, 0}, std::nullopt}}};
    auto gf = gf_families(fc);
    CHECK(gf == gf_by_tuples(fc));
    FamilyConstraint tight{{{{0, 1}, {1, 2}, std::nullopt},
                            {{0, 0}, {1, 1}, std::nullopt}}};
    // Lower path must go East first, upper one North first: one family,
    // one turn at (0,2).
    CHECK(gf_families(tight) == IntPolynomial::monomial(1, 1));
  }
  SUBCASE("no family at all") {
    FamilyConstraint fc{{{{0, 1}, {1, 1}, std::nullopt},
                         {{0, 0}, {1, 2}, std::nullopt}}};
    CHECK(gf_families(fc).is_zero());
  }
  SUBCASE("without disjointness the gf factors") {
    FamilyConstraint fc{{{{0, 1}, {2, 3}, std::nullopt},
                         {{0, 0}, {3, 1}, std::nullopt}},
                        false};
    auto a = gf_families({{fc.paths[0]}});
    auto b = gf_families({{fc.paths[1]}});
    CHECK(gf_families(fc) == a * b);
  }
}

TEST_CASE("gf_families matches tuple enumeration on small ladders") {
  std::mt19937 rng(1234);
  int checked = 0;
  for (int trial = 0; trial < 800; ++trial) {
    const int A = std::uniform_int_distribution<int>(1, 4)(rng);
    const int B = std::uniform_int_distribution<int>(1, 4)(rng);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    auto r = testing::random_region(rng, A, B);
    std::vector<Minor> minors;
    for (auto &m : testing::all_minors(A, B, n))
      if (testing::endpoints_inside(r, m))
        minors.push_back(std::move(m));
    if (minors.empty())
      continue;
    const auto &m = minors[std::uniform_int_distribution<std::size_t>(
        0, minors.size() - 1)(rng)];
    auto fc = theorem3_constraints(r, m);
    CHECK(gf_families(fc) == gf_by_tuples(fc));
    fc.disjoint = false;
    CHECK(gf_families(fc) == gf_by_tuples(fc));
    ++checked;
  }
  CHECK(checked > 200);
}

TEST_CASE("theorem3_constraints turn sets are L^(i) minus B^(i)") {
  const std::vector<Point> corners{{4, 6}, {8, 9}, {10, 13}};
  auto r = LadderRegion::from_corners(15, 13, corners, {});
  Minor m({3, 5, 6}, {1, 2, 4});
  auto fc = theorem3_constraints(r, m);
  auto data = theorem3_data(r, m);
  REQUIRE(fc.paths.size() == 3);
  CHECK(fc.disjoint);
  for (std::size_t k = 0; k < 3; ++k) {
    const int i = static_cast<int>(k) + 1;
    CHECK(fc.paths[k].start == m.start(i));
    CHECK(fc.paths[k].end == m.end(i, 15, 13));
    const auto &allowed = *fc.paths[k].allowed_turns;
    CHECK(allowed.size() ==
          data.regions[k].size() - data.boundaries[k].size());
    for (Point p : data.boundaries[k])
      CHECK_FALSE(allowed.count(p));
  }
}

TEST_CASE("gf degree equals the closed-form total on a small upper ladder") {
  // The one-sided example scaled down to a 7 x 6 grid.
  const std::vector<Point> corners{{2, 3}, {4, 4}, {5, 6}};
  auto r = LadderRegion::from_corners(7, 6, corners, {});
  int checked = 0;
  for (int n = 1; n <= 2; ++n)
    for (const auto &m : testing::all_minors(7, 6, n)) {
      if (!testing::endpoints_inside(r, m))
        continue;
      auto gf = gf_families(theorem3_constraints(r, m));
      if (gf.is_zero())
        continue;
      CHECK(gf.degree() == theorem1_family_max(m, 7, 6, corners).total);
      ++checked;
    }
  CHECK(checked == 14);
}

TEST_CASE("gf degree equals the closed-form total on random upper ladders") {
  std::mt19937 rng(606);
  int checked = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int A = std::uniform_int_distribution<int>(1, 6)(rng);
    const int B = std::uniform_int_distribution<int>(1, 6)(rng);
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    auto r = testing::random_region(rng, A, B, false);
    std::vector<Minor> minors;
    for (auto &m : testing::all_minors(A, B, n))
      if (testing::endpoints_inside(r, m))
        minors.push_back(std::move(m));
    if (minors.empty())
      continue;
    const auto &m = minors[std::uniform_int_distribution<std::size_t>(
        0, minors.size() - 1)(rng)];
    auto gf = gf_families(theorem3_constraints(r, m));
    if (gf.is_zero())
      continue;
    CHECK(gf.degree() ==
          theorem1_family_max(m, A, B, upper_inwards_corners(r)).total);
    ++checked;
  }
  CHECK(checked > 150);
}

TEST_CASE("max_ne_single examples") {
  const std::vector<Point> fig2{{3, 2}, {6, 3}, {6, 5}, {7, 5}};
  CHECK(max_ne_single({0, 1}, {7, 6}, fig2, {}, {}) == 3);
  CHECK(max_ne_single({0, 1}, {12, 14}, fig7_se, fig7_nw, fig7_nw) == 9);
  CHECK(max_ne_single({4, 4}, {4, 4}, {}, {}, {}) == 0);
  // Without the exclusion turns on T points count again.
  CHECK(max_ne_single({0, 1}, {12, 14}, fig7_se, fig7_nw, {}) >= 9);
  const std::vector<Point> s{{3, 0}};
  CHECK_THROWS_AS(max_ne_single({0, 0}, {2, 2}, s, {}, {}), Infeasible);
}

TEST_CASE("lemma1_max equals brute force on every small S set") {
  // All S sets of up to two points in a 7 x 7 box, up to four in 4 x 4.
  auto sweep = [](Point b, std::size_t max_points) {
    std::vector<Point> cells;
    for (int x = 0; x <= b.x; ++x)
      for (int y = 0; y <= b.y; ++y)
        cells.push_back({x, y});
    std::vector<Point> se;
    int sets = 0;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      CHECK(lemma1_max({0, 0}, b, se) == max_ne_single({0, 0}, b, se, {}, {}));
      ++sets;
      if (se.size() == max_points)
        return;
      for (std::size_t k = from; k < cells.size(); ++k) {
        se.push_back(cells[k]);
        rec(k + 1);
        se.pop_back();
      }
    };
    rec(0);
    return sets;
  };
  CHECK(sweep({7, 7}, 2) == 1 + 64 + 64 * 63 / 2);
  CHECK(sweep({4, 4}, 4) == 1 + 25 + 300 + 2300 + 12650);
}

TEST_CASE("max_ne_single agrees with slalom on random gate problems") {
  std::mt19937 rng(2718);
  int feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    Point a{0, 0};
    Point b{std::uniform_int_distribution<int>(0, 10)(rng),
            std::uniform_int_distribution<int>(0, 10)(rng)};
    if (b.x + b.y > 20)
      continue;
    std::vector<Point> se, nw;
    const int m = std::uniform_int_distribution<int>(0, 10)(rng);
    for (int k = 0; k < m; ++k) {
      Point p{std::uniform_int_distribution<int>(0, b.x)(rng),
              std::uniform_int_distribution<int>(0, b.y)(rng)};
      (k % 2 ? nw : se).push_back(p);
    }
    int slow = 0;
    try {
      slow = max_ne_single(a, b, se, nw, nw);
    } catch (const Infeasible &) {
      CHECK_THROWS_AS(slalom_max(a, b, se, nw), Infeasible);
      continue;
    }
    CHECK(slalom_max(a, b, se, nw).max_turns == slow);
    ++feasible;
  }
  CHECK(feasible > 200);
}
