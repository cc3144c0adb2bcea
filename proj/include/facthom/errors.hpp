#ifndef FACTHOM_ERRORS_HPP
#define FACTHOM_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace facthom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A homology query needs a differential outside the stored truncation.
class DegreeOutOfRange : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured number of basis elements.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::size_t needed, std::size_t budget)
      : Error("size budget exceeded: construction needs " + std::to_string(needed) +
              " basis elements, budget is " + std::to_string(budget)),
        needed_(needed),
        budget_(budget) {}
  std::size_t needed() const { return needed_; }
  std::size_t budget() const { return budget_; }

 private:
  std::size_t needed_;
  std::size_t budget_;
};

/// Malformed structured input (algebra, category, cobordism, ... files).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// Input that parses but violates a structural law (associativity, unit, simplicial identity...).
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

}  // namespace facthom

#endif
