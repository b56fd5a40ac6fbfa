#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace secinv {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands live in rings with different variable counts or orders.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain (e.g. lm of zero).
class DomainError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Input data is well formed but mathematically unusable (bad primaries, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A configured resource cap was exceeded (group closure, degree bound).
class ResourceError : public Error {
 public:
  using Error::Error;
};

/// extend_truncated was given a polynomial already in the ideal.
class AlreadyMemberError : public Error {
 public:
  using Error::Error;
};

/// A degree precondition of the truncated Groebner machinery failed.
class DegreeError : public Error {
 public:
  using Error::Error;
};

/// An exactness check failed; indicates a bug rather than bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace secinv
