#pragma once

#include <optional>
#include <vector>

#include "gcdmap/numeric.hpp"

namespace gcdmap {

enum class ConstantId { quad_class, basel };

// Truncated Euler product together with a rigorous bound on
// |log(true / truncated)|. The truncated value always overestimates the
// limit, so the limit lies in [value * exp(-tail_bound), value].
struct EulerProductResult {
  ConstantId id;
  u64 prime_limit;
  BigFloat value;
  BigFloat tail_bound;
  // Filled for prime_limit <= kExactCrossover; the float value is derived
  // from it there.
  std::optional<BigRat> exact_value;
};

// Products run in exact rationals up to this prime limit and in 50-digit
// floats beyond.
inline constexpr u64 kExactCrossover = 1000;

std::vector<u64> primes_up_to(u64 P);

// 1/(p^2 (p+1)), the per-prime probability that p divides both gcd(a, b)
// and a' + b'.
BigRat per_prime_probability(u64 p);

// The conditional factor 1/(p+1).
BigRat per_prime_conditional(u64 p);

// prod_{p<=P} (1 - 1/(p^2(p+1))); limit ~ 0.88151 (the quadratic class
// number constant). Tail bound: sum_{m>P} m^-3 <= 1/(2P^2), which dominates
// -log(1-x_p) <= x_p/(1-x_p) <= 1/p^3 termwise.
EulerProductResult quad_class_constant(u64 P);

// prod_{p<=P} (1 - p^-2); limit 6/pi^2 ~ 0.607927. Tail bound
// sum_{m>P} 1/((m-1)m) = 1/P dominates -log(1-p^-2) <= 1/(p^2-1).
EulerProductResult basel_constant(u64 P);

// (1/N) sum_{n<=N} phi(n) sigma(n) / n^2, which converges to the quadratic
// class number constant. Exact rationals for N <= kExactCrossover, 50-digit
// floats (ascending accumulation, deterministic) beyond.
BigFloat mean_value_sum(u64 N);
BigRat mean_value_sum_exact(u64 N);

// Checks in exact rationals that phi(p^k) sigma(p^k) / p^2k = 1 - 1/p^(k+1)
// for k <= k_max, and that (1 - 1/p) * (p/(p-1) - 1/(p^3-p)) equals the
// Euler factor 1 - 1/(p^2(p+1)).
bool euler_factor_identity_check(u64 p, unsigned k_max,
                                 unsigned* first_failing_k = nullptr);

}  // namespace gcdmap
