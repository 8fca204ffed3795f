#pragma once

#include <numeric>
#include <stdexcept>

#include "gcdmap/numeric.hpp"

namespace gcdmap {

// Ordered pair of positive integers. Zero coordinates are rejected at
// construction; the whole domain is {1, 2, ...} x {1, 2, ...}.
struct Pair {
  u64 a;
  u64 b;

  Pair(u64 a_, u64 b_) : a(a_), b(b_) {
    if (a_ == 0 || b_ == 0)
      throw std::invalid_argument("Pair: coordinates must be >= 1");
  }
};

// (d, a', b') with a = d*a', b = d*b', gcd(a', b') = 1.
struct PrimitiveDecomposition {
  u64 d;
  u64 a_prime;
  u64 b_prime;
};

constexpr u64 gcd_nonneg(u64 x, u64 y) {
  while (y != 0) {
    u64 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

constexpr u128 gcd_u128(u128 x, u128 y) {
  while (y != 0) {
    u128 t = x % y;
    x = y;
    y = t;
  }
  return x;
}

PrimitiveDecomposition decompose(Pair p);

// gcd(ab, a+b) / gcd(a, b), evaluated with 128-bit intermediates.
u64 f_eval(Pair p);

// Same value via the identity gcd(d, a' + b'); the fast kernel everything
// grid-scale builds on.
u64 f_eval_fast(Pair p);

// Raw-kernel version of f_eval_fast for hot loops (no Pair validation).
inline u64 f1_kernel(u64 a, u64 b) {
  u64 d = gcd_nonneg(a, b);
  u128 s = static_cast<u128>(a / d) + (b / d);
  u64 sm = static_cast<u64>(s % d);
  return sm == 0 ? d : gcd_nonneg(d, sm);
}

// gcd(a^r + b^r, ab) / gcd(a, b) with arbitrary-precision intermediates.
BigInt f_r_eval(Pair p, unsigned r);

// A pair witnessing surjectivity: f of the result equals c.
// c >= 2 gives (c, c^2 - c); c = 1 gives (1, 1).
Pair surjectivity_witness(u64 c);

}  // namespace gcdmap
