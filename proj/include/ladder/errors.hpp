#pragma once

#include <stdexcept>
#include <string>

namespace ladder {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed region, minor, path or problem file.
class InvalidInput : public Error {
public:
  using Error::Error;
};

/// The instance falls outside the hypotheses the formulas are proven under
/// (endpoints outside the ladder, boundary sets leaving the ladder, ...).
class AssumptionViolated : public Error {
public:
  using Error::Error;
};

/// No lattice path satisfies the prescribed side constraints.
class Infeasible : public Error {
public:
  using Error::Error;
};

/// Exceeds the step or state budget of the brute-force oracle.
class InstanceTooLarge : public Error {
public:
  using Error::Error;
};

} // namespace ladder
