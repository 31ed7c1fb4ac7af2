#pragma once

#include <stdexcept>
#include <string>

namespace gradus {

/// Base class for every error raised by the engine.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live over different coefficient fields or rings.
class MismatchError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Malformed polynomial text or serialized input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A computation could not produce a certified answer (retry budget
/// exhausted, verification failed, no stabilization, ...).
class ComputationError : public Error {
 public:
  using Error::Error;
};

/// Caller violated a documented precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace gradus
