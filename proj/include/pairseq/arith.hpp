#pragma once

// Checked 64-bit index arithmetic and exact integer square roots.

#include <cstdint>

#include "pairseq/error.hpp"

namespace pairseq::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

inline u64 add(u64 a, u64 b) {
  u64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("index arithmetic overflow (add)");
  return r;
}

inline u64 sub(u64 a, u64 b) {
  if (b > a) throw OverflowError("index arithmetic underflow (sub)");
  return a - b;
}

inline u64 mul(u64 a, u64 b) {
  u64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("index arithmetic overflow (mul)");
  return r;
}

inline i64 to_signed(u64 a) {
  if (a > static_cast<u64>(INT64_MAX)) throw OverflowError("index does not fit a signed 64-bit value");
  return static_cast<i64>(a);
}

inline u64 to_unsigned(i64 a) {
  if (a < 0) throw OverflowError("negative value where an index was expected");
  return static_cast<u64>(a);
}

inline i64 sadd(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("index arithmetic overflow (add)");
  return r;
}

inline i64 ssub(i64 a, i64 b) {
  i64 r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError("index arithmetic overflow (sub)");
  return r;
}

inline i64 smul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("index arithmetic overflow (mul)");
  return r;
}

/// (-1)^e
constexpr i64 neg1_pow(u64 e) noexcept { return (e % 2 == 0) ? 1 : -1; }

/// floor(sqrt(n)), digit-by-digit; no floating point involved.
constexpr u64 isqrt(u64 n) noexcept {
  u64 root = 0;
  u64 bit = u64{1} << 62;
  while (bit > n) bit >>= 2;
  while (bit != 0) {
    if (n >= root + bit) {
      n -= root + bit;
      root = (root >> 1) + bit;
    } else {
      root >>= 1;
    }
    bit >>= 2;
  }
  return root;
}

/// Non-negative remainder in [0, m-1]; m must be positive.
constexpr i64 mod(i64 a, i64 m) noexcept {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

/// floor(a / b) for b > 0.
constexpr i64 floor_div(i64 a, i64 b) noexcept {
  const i64 q = a / b;
  return (a % b != 0 && a < 0) ? q - 1 : q;
}

/// n-th triangular number n(n+1)/2, checked.
inline u64 triangular(u64 n) {
  return (n % 2 == 0) ? mul(n / 2, add(n, 1)) : mul(n, add(n, 1) / 2);
}

/// Anti-diagonal index t of position n: t(t+1)/2 < n <= (t+1)(t+2)/2.
/// Equals floor((sqrt(8n-7)-1)/2) computed exactly.
inline u64 diagonal_of(u64 n) {
  if (n == 0) throw DomainError("position must be >= 1");
  const u64 s = isqrt(sub(mul(8, n), 7));
  return (s - 1) / 2;
}

/// Square shell t = floor(sqrt(n-1)) + 1 of position n: (t-1)^2 < n <= t^2.
inline u64 shell_of(u64 n) {
  if (n == 0) throw DomainError("position must be >= 1");
  return isqrt(n - 1) + 1;
}

}  // namespace pairseq::arith
