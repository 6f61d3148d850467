#include "ladder/a_invariant.hpp"

#include "ladder/errors.hpp"
#include "ladder/turn_maximization.hpp"

#include <algorithm>
#include <limits>

namespace ladder {

std::string_view method_name(Method m) {
  switch (m) {
  case Method::OneSidedFormula:
    return "one-sided-formula";
  case Method::TwoSidedAlgorithm:
    return "two-sided-algorithm";
  case Method::GFDegree:
    return "gf-degree";
  }
  return "unknown";
}

namespace {

AssumptionFlags flags_from(const Theorem3Data &data) {
  return {true, data.boundaries_in_region, data.d_matches_formula};
}

long long sum(const std::vector<int> &t) {
  long long s = 0;
  for (int x : t)
    s += x;
  return s;
}

std::vector<int> closed_form_t(int A, int B, const Minor &minor,
                               const std::vector<Point> &corners) {
  const int n = minor.size();
  std::vector<int> t;
  for (int i = 1; i <= n; ++i) {
    int best = std::numeric_limits<int>::max();
    for (int j = 1; j <= i; ++j) {
      const int u = minor.u()[static_cast<std::size_t>(n - j)];
      const int v = minor.v()[static_cast<std::size_t>(n - j)];
      best = std::min({best, B + u - 1 - 2 * (i - j), A + v - 1 - 2 * (i - j)});
    }
    for (Point c : corners)
      best = std::min(best, B - c.x + c.y - 2 * (i - 1));
    t.push_back(best);
  }
  return t;
}

} // namespace

AInvariantReport a_invariant_one_sided(const LadderRegion &region,
                                       const Minor &minor) {
  if (!region.is_upper())
    throw InvalidInput("one-sided formula needs an upper ladder");
  const int A = region.max_y(), B = region.max_x();
  const auto data = theorem3_data(region, minor);
  AInvariantReport r;
  r.method = Method::OneSidedFormula;
  r.t = closed_form_t(A, B, minor, upper_inwards_corners(region));
  r.d = data.d;
  r.flags = flags_from(data);
  r.value = sum(r.t) - static_cast<long long>(A + B + 1) * minor.size();
  return r;
}

AInvariantReport a_invariant_rectangular(int A, int B, const Minor &minor) {
  return a_invariant_one_sided(LadderRegion::rectangle(A, B), minor);
}

AInvariantReport a_invariant_two_sided(const LadderRegion &region,
                                       const Minor &minor) {
  const int A = region.max_y(), B = region.max_x();
  const auto data = theorem3_data(region, minor);
  if (!data.boundaries_in_region)
    throw AssumptionViolated(
        "some boundary set B^(i) is not a full path inside the ladder");
  const auto result =
      theorem2_family_max(minor, A, B, upper_inwards_corners(region),
                          lower_inwards_corners(region));
  AInvariantReport r;
  r.method = Method::TwoSidedAlgorithm;
  r.t = result.t;
  r.d = data.d;
  r.flags = flags_from(data);
  r.value = sum(r.t) + minor.weight() -
            static_cast<long long>(A + B + 3) * minor.size();
  return r;
}

AInvariantReport a_invariant_from_gf(const LadderRegion &region,
                                     const Minor &minor,
                                     const OracleBudget &budget) {
  const auto data = theorem3_data(region, minor);
  const auto gf = gf_families(theorem3_constraints(region, minor), budget);
  if (gf.is_zero())
    throw AssumptionViolated("no admissible family of paths exists");
  AInvariantReport r;
  r.method = Method::GFDegree;
  r.d = data.d;
  r.flags = flags_from(data);
  r.value = gf.degree() - data.d;
  return r;
}

AInvariantReport a_invariant(const LadderRegion &region, const Minor &minor) {
  if (region.is_upper())
    return a_invariant_one_sided(region, minor);
  return a_invariant_two_sided(region, minor);
}

} // namespace ladder
