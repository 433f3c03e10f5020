#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace urm {

/// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number of the offending line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Structurally invalid argument (loop edge, edge not in the graph, bad permutation, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// The input does not belong to the graph class a solver requires.
/// The message names a witness (vertex, pair or triple).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A desk-scale routine refused an input above its hard-coded size bound.
class BoundError : public Error {
 public:
  using Error::Error;
};

/// An internal invariant failed. Indicates a bug, never bad input.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace urm
