#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace genfrob {

using Int = std::int64_t;

/// Raised for inputs that violate a type invariant (gcd, dimension, rank, ...).
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exact 64-bit computation would overflow.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Raised when a search needs to go past a caller-supplied cap.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer overflow in subtraction");
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline Int abs(Int a) { return a < 0 ? neg(a) : a; }

// Result in [0, m) for m > 0.
inline Int mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

// Saturating addition used by the capped counting tables.
inline Int sat_add(Int a, Int b, Int cap) {
  Int r;
  if (__builtin_add_overflow(a, b, &r) || r > cap) return cap;
  return r;
}

}  // namespace checked
}  // namespace genfrob
