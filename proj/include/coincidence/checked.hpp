#pragma once

// Overflow-checked int64 arithmetic. Every operation either returns the exact
// result or throws Error{IntegerOverflow}; nothing wraps.

#include "coincidence/error.hpp"

#include <cstdint>
#include <limits>
#include <numeric>

namespace coincidence {

inline int64_t checked_add(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw Error(Errc::IntegerOverflow, "int64 addition overflowed");
  return r;
}

inline int64_t checked_sub(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw Error(Errc::IntegerOverflow, "int64 subtraction overflowed");
  return r;
}

inline int64_t checked_mul(int64_t a, int64_t b) {
  int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw Error(Errc::IntegerOverflow, "int64 multiplication overflowed");
  return r;
}

inline int64_t checked_neg(int64_t a) {
  if (a == std::numeric_limits<int64_t>::min())
    throw Error(Errc::IntegerOverflow, "int64 negation overflowed");
  return -a;
}

inline int64_t checked_abs(int64_t a) { return a < 0 ? checked_neg(a) : a; }

// Floor division and the matching nonnegative remainder (b > 0).
inline int64_t floor_div(int64_t a, int64_t b) {
  int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline int64_t floor_mod(int64_t a, int64_t b) {
  int64_t r = a % b;
  if (r < 0)
    r += b;
  return r;
}

inline int64_t checked_lcm(int64_t a, int64_t b) {
  if (a == 0 || b == 0)
    return 0;
  return checked_abs(checked_mul(a / std::gcd(a, b), b));
}

} // namespace coincidence
