#ifndef KBG_CHECKED_HPP_
#define KBG_CHECKED_HPP_

#include <cstdint>

#include "kbg/error.hpp"

namespace kbg {

using i64 = std::int64_t;

// All exponent arithmetic in the library goes through these helpers.
// Silent wraparound is forbidden; out-of-range results throw OverflowError.

inline i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer addition overflow");
  return r;
}

inline i64 checked_sub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("integer subtraction overflow");
  return r;
}

inline i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer multiplication overflow");
  return r;
}

inline i64 checked_neg(i64 a) { return checked_sub(0, a); }

inline i64 checked_abs(i64 a) { return a < 0 ? checked_neg(a) : a; }

inline bool is_odd(i64 a) { return a % 2 != 0; }

}  // namespace kbg

#endif  // KBG_CHECKED_HPP_
