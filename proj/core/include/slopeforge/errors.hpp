#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slopeforge {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument was violated.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Malformed text input. line() is 1-based; 0 when no line applies.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Exact search refused because the instance exceeds the configured size limit.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// Floating-point measurements fall inside the ambiguity band; the count
// cannot be trusted. Use exact coordinates or class labels instead.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

// A drawing construction could not satisfy its own geometric conditions.
class ConstructionError : public Error {
 public:
  using Error::Error;
};

}  // namespace slopeforge
