#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ufsr {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mathematically well-formed request that the library refuses: mismatched
/// domains or algebras, non-invertible input, violated preconditions.
class DomainError : public Error {
 public:
  using Error::Error;
};

class NotInvertible : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The answer exists but cannot be computed exactly here (e.g. it would
/// require enumerating an infinite field).
class Unsupported : public DomainError {
 public:
  using DomainError::DomainError;
};

class PreconditionError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A search bound (recursion cap, enumeration size) was hit.
class LimitExceeded : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Malformed text input. `position()` is a 0-based character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : Error(message + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Invalid algebra specification (bad JSON, duplicate generators,
/// inhomogeneous relation, trivial quotient, ...).
class SpecError : public Error {
 public:
  using Error::Error;
};

}  // namespace ufsr
