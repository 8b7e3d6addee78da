#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace euler {

/// Base of every error raised by the library. The CLI maps ParseError to
/// exit code 2 and everything else derived from Error to exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class OutOfRangeError : public Error {
 public:
  using Error::Error;
};

class InvalidArgumentError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs at least one edge.
class TrivialGraphError : public PreconditionError {
 public:
  TrivialGraphError() : PreconditionError("graph has no edges") {}
};

class TooLargeError : public Error {
 public:
  using Error::Error;
};

class MalformedTrailError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace euler
