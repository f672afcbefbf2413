#pragma once

#include <stdexcept>
#include <string>

namespace leib3 {

/// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Caller misuse: mismatched fields, mismatched dimensions, bad arguments.
struct UsageError : Error {
  using Error::Error;
};

/// Division by zero or inversion of zero in a field.
struct DivisionByZeroError : Error {
  using Error::Error;
};

/// Malformed input file or scalar string; the message names the offending
/// field or token.
struct ParseError : Error {
  using Error::Error;
};

/// An operation whose hypothesis excludes this field (characteristic 2).
struct UnsupportedFieldError : Error {
  using Error::Error;
};

/// An operation required a valid algebra but the identity check failed.
struct InvalidAlgebraError : Error {
  using Error::Error;
};

/// Enumeration refused because the candidate count exceeds the budget.
struct BudgetExceededError : Error {
  BudgetExceededError(const std::string& msg, std::string candidate_count)
      : Error(msg), candidates(std::move(candidate_count)) {}
  std::string candidates;  // exact count, decimal string (may exceed 2^64)
};

/// A self-check that can only fail on an implementation bug.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace leib3
