#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bbnsim {

/// Base class for all recoverable simulator errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input file content; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Structurally valid input that violates a schema constraint
/// (unknown node id, bad population definition, ...).
class SchemaError : public Error {
 public:
  using Error::Error;
};

class EmptyTraceError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class UnknownNodeError : public Error {
 public:
  using Error::Error;
};

/// A delivery computation referenced a link gain that was never observed.
class IncompleteObservationError : public Error {
 public:
  using Error::Error;
};

/// Sample set carries no usable information for the requested fit.
class DegenerateFitError : public Error {
 public:
  using Error::Error;
};

}  // namespace bbnsim
