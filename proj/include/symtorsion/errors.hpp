#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace symt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Dimension or lattice mismatch between operands.
class StructuralError : public Error {
 public:
  using Error::Error;
};

// Several support elements share the minimal weight; no single leading
// monomial exists.
class AmbiguousLeadingTerm : public Error {
 public:
  using Error::Error;
};

class NotAUnit : public Error {
 public:
  using Error::Error;
};

// Shape mismatch or a nonzero entry of d∘d.
class InvalidComplex : public Error {
 public:
  using Error::Error;
};

class NotAcyclic : public Error {
 public:
  using Error::Error;
};

// Elimination met a column whose nonzero entries all lack an unambiguous
// leading term, so invertibility cannot be decided.
class IndeterminatePivot : public Error {
 public:
  using Error::Error;
};

// Parameters of a dynamical model violate its standing assumptions.
class InvalidSystem : public Error {
 public:
  using Error::Error;
};

class NumericalError : public Error {
 public:
  using Error::Error;
};

// A document could not be read from disk.
class IoError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace symt
