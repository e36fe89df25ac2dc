#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bcapprox {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// An edge list with no usable edge.
class EmptyGraphError : public Error {
 public:
  using Error::Error;
};

// Fewer than two nodes; betweenness is undefined.
class DegenerateGraphError : public Error {
 public:
  using Error::Error;
};

// A caller-supplied parameter lies outside its documented domain.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed (corrupted sample, impossible estimate).
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A wall-clock budget was exhausted before a computation could finish.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

}  // namespace bcapprox
