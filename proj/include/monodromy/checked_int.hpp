#pragma once

#include <cstdint>

#include "monodromy/errors.hpp"

namespace monodromy {

// 64-bit arithmetic that throws instead of wrapping. Every exact invariant
// in this project (Euler characteristics, Smith normal forms) goes through
// these helpers.

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("integer overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("integer overflow in multiplication");
  return r;
}

inline long long checked_neg(long long a) {
  if (a == INT64_MIN) throw InternalError("integer overflow in negation");
  return -a;
}

inline long long gcd_ll(long long a, long long b) {
  if (a < 0) a = checked_neg(a);
  if (b < 0) b = checked_neg(b);
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long lcm_ll(long long a, long long b) {
  if (a == 0 || b == 0) return 0;
  long long g = gcd_ll(a, b);
  return checked_mul(a / g, b < 0 ? checked_neg(b) : b);
}

}  // namespace monodromy
