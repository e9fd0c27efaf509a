#pragma once

#include <stdexcept>
#include <string>

namespace nbf {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// An input value violates a documented invariant. `field()` names the
// offending field so callers can report it precisely.
class ValidationError : public Error {
 public:
  ValidationError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// A table has the wrong shape for the requested operation.
class DimensionError : public Error {
 public:
  using Error::Error;
};

// A table with grand total zero (no observations at all).
class DegenerateTableError : public Error {
 public:
  using Error::Error;
};

// A unit exchange would drive a cell count negative.
class InfeasibleExchangeError : public Error {
 public:
  using Error::Error;
};

// Zero within-group variance with nonzero between-group variance: F has no
// finite value and nb cannot be represented inside [0,1).
class InfiniteFError : public Error {
 public:
  using Error::Error;
};

// All observations identical: F is 0/0.
class IndeterminateAnovaError : public Error {
 public:
  using Error::Error;
};

// Zero variance in one coordinate: the correlation does not exist.
class UndefinedCorrelationError : public Error {
 public:
  using Error::Error;
};

// |r| so close to 1 that the Fisher transform diverges.
class DegenerateCorrelationError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of a function.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Malformed textual input. Rows and columns are 1-based; 0 means
// "not applicable".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t row = 0, std::size_t col = 0)
      : Error(location_prefix(row, col) + what), row_(row), col_(col) {}

  std::size_t row() const noexcept { return row_; }
  std::size_t col() const noexcept { return col_; }

 private:
  static std::string location_prefix(std::size_t row, std::size_t col) {
    if (row == 0) return "";
    std::string p = "row " + std::to_string(row);
    if (col != 0) p += ", column " + std::to_string(col);
    return p + ": ";
  }

  std::size_t row_;
  std::size_t col_;
};

}  // namespace nbf
