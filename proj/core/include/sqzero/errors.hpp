#pragma once

#include <stdexcept>
#include <string>

namespace sqzero {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes are incompatible with the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A matrix that must be entrywise nonnegative has a negative entry.
class NegativeEntryError : public Error {
 public:
  NegativeEntryError(const std::string& what, std::size_t row, std::size_t col)
      : Error(what + ": negative entry at (" + std::to_string(row) + ", " +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Division by zero or inversion of a singular matrix.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition of an algorithm does not hold
/// (e.g. U^3 != 0 passed to the cube-zero decomposition).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An enumeration or search would exceed its configured budget.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace sqzero
