#pragma once

#include "ladder/oracle.hpp"
#include "ladder/region.hpp"

#include <string_view>
#include <vector>

namespace ladder {

enum class Method { OneSidedFormula, TwoSidedAlgorithm, GFDegree };

std::string_view method_name(Method m);

/// Which hypotheses were checked on the way to the value.
struct AssumptionFlags {
  bool endpoints_in_region = false;
  /// Every boundary set B^(i) is a full path inside the ladder.
  bool boundaries_in_region = false;
  /// |union of B^(i)| equals (A+B+3)n - sum(u_i + v_i).
  bool d_matches_formula = false;
};

struct AInvariantReport {
  long long value = 0;
  std::vector<int> t;
  int d = 0;
  Method method = Method::OneSidedFormula;
  AssumptionFlags flags;
};

/// Closed form for upper ladders; t_i counts turns in the shifted picture
/// where they equal the one-sided maxima plus a_i + b_i.
/// Throws InvalidInput for a ladder with a lower boundary and
/// AssumptionViolated if an endpoint lies outside the ladder.
AInvariantReport a_invariant_one_sided(const LadderRegion &region,
                                       const Minor &minor);

/// The full-rectangle case of the closed form.
AInvariantReport a_invariant_rectangular(int A, int B, const Minor &minor);

/// Slalom maxima summed with the boundary weights. Throws
/// AssumptionViolated when a boundary set B^(i) leaves the ladder.
AInvariantReport a_invariant_two_sided(const LadderRegion &region,
                                       const Minor &minor);

/// deg GF - d from the brute-force generating function.
AInvariantReport a_invariant_from_gf(const LadderRegion &region,
                                     const Minor &minor,
                                     const OracleBudget &budget = {});

/// One-sided formula for upper ladders, slalom algorithm otherwise.
AInvariantReport a_invariant(const LadderRegion &region, const Minor &minor);

} // namespace ladder
