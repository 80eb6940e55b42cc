#pragma once

#include <stdexcept>
#include <string>

namespace graphmodel {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, non-parallel morphisms,
/// maps that are not homomorphisms, unparsable files.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// A text file could not be parsed; `line()` is 1-based (0 when unknown).
class ParseError : public InvalidInput {
 public:
  ParseError(int line, const std::string& what)
      : InvalidInput(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// A search or enumeration ran past its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class CompositionError : public Error {
 public:
  using Error::Error;
};

class CommutativityError : public Error {
 public:
  using Error::Error;
};

/// A shipped lifting generator does not have the lifting class it is
/// supposed to have, or no reconstruction candidate matched its target.
class GeneratorFalsified : public Error {
 public:
  using Error::Error;
};

/// A factorization produced parts that do not recompose or classify as
/// required. Indicates an implementation bug.
class FactorizationSoundnessError : public Error {
 public:
  using Error::Error;
};

class UnsupportedStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace graphmodel
