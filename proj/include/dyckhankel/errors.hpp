#pragma once

#include <stdexcept>
#include <string>

namespace dyckhankel {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was violated by its arguments.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Division by an exact zero (rational, polynomial or rational function).
class DivisionByZero : public Error {
 public:
  using Error::Error;
};

/// A rational function has a pole at x = 0 where a power series was required.
class PoleAtOrigin : public Error {
 public:
  using Error::Error;
};

/// Two truncated series of different orders were combined.
class OrderMismatch : public Error {
 public:
  using Error::Error;
};

/// A computation needs more series coefficients than are available.
class InsufficientOrder : public Error {
 public:
  using Error::Error;
};

/// A requested size exceeds a desk-scale guard.
class GuardViolation : public Error {
 public:
  using Error::Error;
};

/// Two independent computations that must agree did not.
class CrossCheckFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace dyckhankel
