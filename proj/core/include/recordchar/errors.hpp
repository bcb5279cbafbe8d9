#pragma once

#include <stdexcept>

namespace recordchar {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument is outside an operation's domain (x below the support,
/// invalid parameter, bad index, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A quantity left the representable range: cumulative hazard past the
/// upper-tail boundary, or an integer coefficient past 64 bits.
class OverflowError : public Error {
 public:
  using Error::Error;
};

/// An iterative scheme (root find, eigen iteration) did not converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Quadrature could not reach the requested accuracy within its budget.
class QuadratureError : public Error {
 public:
  using Error::Error;
};

/// A sampling draw budget was exhausted before producing the request.
class BudgetError : public Error {
 public:
  using Error::Error;
};

/// The requested computation route does not exist for these inputs.
class UnsupportedMethodError : public Error {
 public:
  using Error::Error;
};

/// Invalid run configuration (CLI flags, JSON config, input files).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Filesystem or stream failure.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace recordchar
