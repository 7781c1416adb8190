#pragma once

#include <stdexcept>
#include <string>

namespace prymcalc {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient domains or variable lists.
class DomainMismatch : public Error {
 public:
  using Error::Error;
};

/// A caller-supplied value violates an operation's precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Division by zero or inversion of a non-unit.
class NotInvertible : public Error {
 public:
  using Error::Error;
};

/// An internal consistency check failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace prymcalc
