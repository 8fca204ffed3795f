#include "gcdmap/core_arith.hpp"

namespace gcdmap {

PrimitiveDecomposition decompose(Pair p) {
  u64 d = gcd_nonneg(p.a, p.b);
  return {d, p.a / d, p.b / d};
}

u64 f_eval(Pair p) {
  u128 prod = static_cast<u128>(p.a) * p.b;
  u128 sum = static_cast<u128>(p.a) + p.b;
  u128 g = gcd_u128(prod, sum);
  u64 d = gcd_nonneg(p.a, p.b);
  // Integrality is Prop-1.1 territory; guard it anyway.
  if (g % d != 0) throw std::logic_error("f_eval: gcd(ab, a+b) not divisible by gcd(a, b)");
  return static_cast<u64>(g / d);
}

u64 f_eval_fast(Pair p) { return f1_kernel(p.a, p.b); }

BigInt f_r_eval(Pair p, unsigned r) {
  if (r == 0) throw std::invalid_argument("f_r_eval: r must be >= 1");
  BigInt a = p.a, b = p.b;
  BigInt powsum = boost::multiprecision::pow(a, r) + boost::multiprecision::pow(b, r);
  BigInt g = boost::multiprecision::gcd(powsum, a * b);
  return g / gcd_nonneg(p.a, p.b);
}

Pair surjectivity_witness(u64 c) {
  if (c == 0) throw std::invalid_argument("surjectivity_witness: c must be >= 1");
  if (c == 1) return Pair(1, 1);
  return Pair(c, c * c - c);
}

}  // namespace gcdmap
