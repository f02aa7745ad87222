#pragma once

#include <stdexcept>
#include <string>

namespace frl {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Argument sits on (or within 1e-12 of) a Gamma-function pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Index outside the usable (non-aliased) frequency range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// A stated precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Numerical procedure exhausted its budget without meeting tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace frl
