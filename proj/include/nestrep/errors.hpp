#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nestrep {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text. Carries the 1-based line number when known (0 otherwise).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Structural errors in graphs: duplicate names, unknown vertices, bad edges.
class GraphError : public Error {
 public:
  using Error::Error;
};

/// Two paths whose endpoints do not meet.
class CompositionError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of a construction or theorem does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or basis would exceed the configured bound.
class LimitError : public Error {
 public:
  using Error::Error;
};

/// Incompatible matrix shapes.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a nonzero element received zero.
class ZeroElementError : public Error {
 public:
  using Error::Error;
};

}  // namespace nestrep
