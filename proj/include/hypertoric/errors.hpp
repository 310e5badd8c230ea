#pragma once

#include <stdexcept>
#include <string>

namespace hypertoric {

// Base of every error the library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input document or command line.
struct ParseError : Error {
  using Error::Error;
};

// Arrangement violates one of the structural assumptions (Z-span,
// nonzero weights, k >= 1, ...).
struct ValidationError : Error {
  using Error::Error;
};

// Arrangement is not simple, or no simple affinization was found.
struct NotSimpleError : Error {
  using Error::Error;
};

// Quotient ring is not finite dimensional (or looks that way).
struct NotFiniteError : Error {
  using Error::Error;
};

// A configurable work budget was exhausted.
struct BudgetExceededError : Error {
  using Error::Error;
};

}  // namespace hypertoric
