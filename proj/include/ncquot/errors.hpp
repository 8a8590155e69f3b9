#pragma once

#include <stdexcept>
#include <string>

namespace ncquot {

// Every division demanded by the recursion is exact in the ring; a nonzero
// remainder therefore signals a formula-transcription bug, never a valid state.
struct NonExactDivision : std::runtime_error {
  explicit NonExactDivision(const std::string& msg) : std::runtime_error(msg) {}
};

// Divisor has no +/-1 coefficient at its lowest exponent after normalization.
struct NonMonicDivisor : std::runtime_error {
  explicit NonMonicDivisor(const std::string& msg) : std::runtime_error(msg) {}
};

// Integer evaluation hit an odd doubled exponent (a genuine half power).
struct HalfIntegerExponent : std::runtime_error {
  explicit HalfIntegerExponent(const std::string& msg) : std::runtime_error(msg) {}
};

// Binary series operation on series of different truncation orders.
struct OrderMismatch : std::runtime_error {
  explicit OrderMismatch(const std::string& msg) : std::runtime_error(msg) {}
};

struct InvalidRange : std::invalid_argument {
  explicit InvalidRange(const std::string& msg) : std::invalid_argument(msg) {}
};

// A computed class violated a structural guarantee (polynomiality, monicity,
// dimension, nonnegativity). Raised eagerly on cache insertion.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded(const std::string& msg, std::string required_size)
      : std::runtime_error(msg), required(std::move(required_size)) {}
  // Decimal string: the enumeration size the request would need.
  std::string required;
};

}  // namespace ncquot
