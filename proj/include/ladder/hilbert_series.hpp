#pragma once

#include "ladder/oracle.hpp"
#include "ladder/polynomial.hpp"
#include "ladder/region.hpp"

namespace ladder {

/// The rational function numerator(z) / (1 - z)^d.
struct HilbertSeries {
  IntPolynomial numerator;
  int d = 0;
};

/// Numerator from the brute-force family generating function, d from the
/// boundary sets. Throws AssumptionViolated if an endpoint leaves the
/// ladder and InstanceTooLarge past the budget.
HilbertSeries hilbert_numerator(const LadderRegion &region, const Minor &minor,
                                const OracleBudget &budget = {});

/// C(n, k); zero when k < 0 or k > n.
BigInt binomial(int n, int k);

/// Coefficient of z^ell in H(z) / (1 - z)^d, d >= 1.
BigInt hilbert_coefficient(const IntPolynomial &H, int d, int ell);

} // namespace ladder
