#include "ladder/polynomial.hpp"

#include "ladder/errors.hpp"

#include <sstream>

namespace ladder {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(BigInt c, int degree) {
  if (degree < 0)
    throw InvalidInput("negative monomial degree");
  std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

BigInt IntPolynomial::coefficient(int k) const {
  if (k < 0 || k > degree())
    return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

BigInt IntPolynomial::evaluate(const BigInt &z) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * z + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (coeffs_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt &c = coeffs_[k];
    if (c == 0)
      continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first)
      os << (c < 0 ? "-" : "");
    else
      os << (c < 0 ? " - " : " + ");
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1)
      os << mag << '*';
    os << 'z';
    if (k > 1)
      os << '^' << k;
  }
  return os.str();
}

IntPolynomial &IntPolynomial::operator+=(const IntPolynomial &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
    coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

void IntPolynomial::add_term(const BigInt &c, int k) {
  if (k < 0)
    throw InvalidInput("negative exponent");
  if (static_cast<std::size_t>(k) >= coeffs_.size())
    coeffs_.resize(static_cast<std::size_t>(k) + 1);
  coeffs_[static_cast<std::size_t>(k)] += c;
  trim();
}

IntPolynomial IntPolynomial::shifted(int k) const {
  if (k < 0)
    throw InvalidInput("negative shift");
  if (is_zero())
    return {};
  std::vector<BigInt> out(static_cast<std::size_t>(k));
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial &lhs, const IntPolynomial &rhs) {
  if (lhs.is_zero() || rhs.is_zero())
    return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

} // namespace ladder
