#pragma once

#include <stdexcept>

namespace toricq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Bad field parameters or an undefined field operation (inv of zero, ...).
struct FieldError : Error {
  using Error::Error;
};

// Argument outside its documented range.
struct RangeError : Error {
  using Error::Error;
};

// The slope parameter r must divide q-2.
struct DivisibilityError : Error {
  using Error::Error;
};

// Incompatible shapes, mismatched fields or empty inputs.
struct DimensionError : Error {
  using Error::Error;
};

// Exhaustive work would exceed the enumeration budget.
struct BudgetError : Error {
  using Error::Error;
};

// CSS nesting precondition does not hold.
struct NestingError : Error {
  using Error::Error;
};

// Malformed suite configuration.
struct ConfigError : Error {
  using Error::Error;
};

}  // namespace toricq
