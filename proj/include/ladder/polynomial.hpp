#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace ladder {

using BigInt = boost::multiprecision::cpp_int;

/// Polynomial in z with arbitrary-precision integer coefficients.
///
/// Coefficients are stored from degree 0 upwards and kept trimmed, so the
/// highest stored coefficient is nonzero; the zero polynomial stores none.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);
  static IntPolynomial monomial(BigInt c, int degree);
  static IntPolynomial constant(BigInt c) { return monomial(std::move(c), 0); }

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const {
    return static_cast<int>(coeffs_.size()) - 1;
  }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// Zero outside the stored range.
  [[nodiscard]] BigInt coefficient(int k) const;
  [[nodiscard]] const std::vector<BigInt> &coefficients() const {
    return coeffs_;
  }
  [[nodiscard]] BigInt evaluate(const BigInt &z) const;

  /// Human-readable form, e.g. "1 + 3*z + z^2"; "0" for the zero polynomial.
  [[nodiscard]] std::string to_string() const;

  IntPolynomial &operator+=(const IntPolynomial &rhs);
  /// Adds c * z^k in place.
  void add_term(const BigInt &c, int k);
  /// This polynomial times z^k, k >= 0.
  [[nodiscard]] IntPolynomial shifted(int k) const;

  friend IntPolynomial operator+(IntPolynomial lhs, const IntPolynomial &rhs) {
    lhs += rhs;
    return lhs;
  }
  friend IntPolynomial operator*(const IntPolynomial &lhs,
                                 const IntPolynomial &rhs);
  friend bool operator==(const IntPolynomial &,
                         const IntPolynomial &) = default;

private:
  void trim();
  std::vector<BigInt> coeffs_;
};

} // namespace ladder
