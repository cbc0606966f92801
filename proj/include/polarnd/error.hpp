#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polarnd {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed curve expression; `position` is the 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A numeric expansion was not carried far enough to decide a quantity.
class InsufficientDepthError : public Error {
 public:
  using Error::Error;
};

/// Numeric root clustering could not be resolved at the requested tolerance.
class ToleranceError : public Error {
 public:
  using Error::Error;
};

}  // namespace polarnd
