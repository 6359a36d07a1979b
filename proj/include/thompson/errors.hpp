#pragma once

#include <stdexcept>
#include <string>

namespace thompson {

// Error hierarchy. The C API maps each class onto a status code.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text or breakpoint data.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Well-formed input that violates an operation's precondition.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Caller misuse (bad arguments, bounds exceeded).
class UsageError : public Error {
 public:
  using Error::Error;
};

/// A postcondition check failed. Always a bug, never a user error.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace thompson
