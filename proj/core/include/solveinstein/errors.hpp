#pragma once

#include <stdexcept>
#include <string>

namespace solveinstein {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid or inconsistent user-supplied configuration.
class ConfigError : public Error {
public:
  using Error::Error;
};

/// Tensor or matrix shapes do not match the family dimensions.
class DimensionMismatch : public Error {
public:
  using Error::Error;
};

/// A map that must be invertible is numerically singular.
class SingularMap : public Error {
public:
  using Error::Error;
};

/// Newton iteration did not reach the requested tolerance.
class MaxIterExceeded : public Error {
public:
  using Error::Error;
};

/// The constrained Newton Jacobian is rank-deficient beyond threshold.
class SingularJacobian : public Error {
public:
  using Error::Error;
};

/// A finite-difference stencil would leave the chart t > 0.
class NonPositiveT : public Error {
public:
  using Error::Error;
};

/// A quadratic form expected to be positive definite is not.
class NotPositiveDefinite : public Error {
public:
  using Error::Error;
};

}  // namespace solveinstein
