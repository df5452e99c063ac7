#pragma once

#include <cstdint>

namespace ecc {

/// Floor of the integer square root.
inline uint64_t isqrt(uint64_t n) {
  if (n == 0) return 0;
  uint64_t x = n, y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

/// Smallest integer t with t*t > n.
inline long long strict_sqrt_bound(uint64_t n) { return (long long)isqrt(n) + 1; }

/// Ceiling of sqrt(n).
inline long long ceil_sqrt(uint64_t n) {
  uint64_t r = isqrt(n);
  return (long long)(r * r == n ? r : r + 1);
}

/// Ceiling division, correct for negative numerators.
inline long long ceil_div(long long a, long long b) {
  long long q = a / b, r = a % b;
  return q + ((r != 0 && (r > 0) == (b > 0)) ? 1 : 0);
}

/// base^exp saturating at limit+1 (so "> limit" checks stay valid).
inline uint64_t sat_pow(uint64_t base, uint32_t exp, uint64_t limit) {
  uint64_t r = 1;
  for (uint32_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace ecc
