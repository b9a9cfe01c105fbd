#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace higgs {

/// Input outside an operation's mathematical domain (zero-rank slope,
/// degree beyond the Milnor-Wood range, non-complex group for Laumon, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A value violates a structural invariant (malformed grading, broken
/// block alternation, failed contract identity).
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Integer arithmetic left the int64 range.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

namespace checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("int64 overflow in addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("int64 overflow in subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("int64 overflow in multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) {
  if (a == std::numeric_limits<std::int64_t>::min()) throw OverflowError("int64 overflow in negation");
  return -a;
}

/// 2^k, throwing when the result does not fit.
inline std::int64_t pow2(std::int64_t k) {
  if (k < 0 || k > 62) throw OverflowError("2^" + std::to_string(k) + " out of int64 range");
  return std::int64_t{1} << k;
}

inline std::int64_t narrow(__int128 v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
    throw OverflowError("int64 overflow narrowing 128-bit intermediate");
  return static_cast<std::int64_t>(v);
}

}  // namespace checked
}  // namespace higgs
