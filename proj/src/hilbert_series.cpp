#include "ladder/hilbert_series.hpp"

#include "ladder/errors.hpp"

#include <algorithm>

namespace ladder {

HilbertSeries hilbert_numerator(const LadderRegion &region, const Minor &minor,
                                const OracleBudget &budget) {
  const auto data = theorem3_data(region, minor);
  return {gf_families(theorem3_constraints(region, minor), budget), data.d};
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n)
    return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  // r stays an integer: after step i it equals C(n-k+i, i).
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt hilbert_coefficient(const IntPolynomial &H, int d, int ell) {
  if (d < 1)
    throw InvalidInput("denominator exponent must be positive");
  if (ell < 0)
    throw InvalidInput("coefficient index must be nonnegative");
  BigInt sum = 0;
  for (int k = 0; k <= std::min(ell, H.degree()); ++k)
    sum += H.coefficient(k) * binomial(ell - k + d - 1, d - 1);
  return sum;
}

} // namespace ladder
