#include "gcdmap/euler_constants.hpp"

#include <stdexcept>

#include "gcdmap/analytic_sums.hpp"
#include "gcdmap/solution_param.hpp"

namespace gcdmap {

std::vector<u64> primes_up_to(u64 P) {
  std::vector<u64> primes;
  if (P < 2) return primes;
  std::vector<bool> composite(P + 1, false);
  for (u64 i = 2; i <= P; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= P; j += i) composite[j] = true;
  }
  return primes;
}

BigRat per_prime_probability(u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("per_prime_probability: p must be prime");
  return BigRat(1, BigInt(p) * p * (p + 1));
}

BigRat per_prime_conditional(u64 p) {
  if (!is_prime_u64(p)) throw std::invalid_argument("per_prime_conditional: p must be prime");
  return BigRat(1, p + 1);
}

namespace {

EulerProductResult euler_product(ConstantId id, u64 P) {
  if (P < 2) throw std::invalid_argument("euler product: P must be >= 2");
  auto factor = [id](u64 p) -> BigRat {
    BigInt den = (id == ConstantId::quad_class) ? BigInt(p) * p * (p + 1)
                                                : BigInt(p) * p;
    return BigRat(den - 1, den);
  };
  EulerProductResult res;
  res.id = id;
  res.prime_limit = P;
  std::vector<u64> primes = primes_up_to(P);
  if (P <= kExactCrossover) {
    BigRat prod = 1;
    for (u64 p : primes) prod *= factor(p);
    res.exact_value = prod;
    res.value = BigFloat(prod);
  } else {
    BigFloat prod = 1;
    for (u64 p : primes) prod *= BigFloat(factor(p));
    res.value = prod;
  }
  if (id == ConstantId::quad_class)
    res.tail_bound = BigFloat(1) / (BigFloat(2) * P * P);
  else
    res.tail_bound = BigFloat(1) / P;
  return res;
}

}  // namespace

EulerProductResult quad_class_constant(u64 P) {
  return euler_product(ConstantId::quad_class, P);
}

EulerProductResult basel_constant(u64 P) {
  return euler_product(ConstantId::basel, P);
}

BigRat mean_value_sum_exact(u64 N) {
  if (N == 0) throw std::invalid_argument("mean_value_sum: N must be >= 1");
  ArithTables t = sieve_tables(N);
  BigRat sum = 0;
  for (u64 n = 1; n <= N; ++n)
    sum += BigRat(BigInt(t.phi[n]) * t.sigma[n], BigInt(n) * n);
  return sum / N;
}

BigFloat mean_value_sum(u64 N) {
  if (N == 0) throw std::invalid_argument("mean_value_sum: N must be >= 1");
  if (N <= kExactCrossover) return BigFloat(mean_value_sum_exact(N));
  ArithTables t = sieve_tables(N);
  BigFloat sum = 0;
  for (u64 n = 1; n <= N; ++n) {
    BigFloat term = BigFloat(BigInt(t.phi[n]) * t.sigma[n]);
    sum += term / (BigFloat(n) * n);
  }
  return sum / N;
}

bool euler_factor_identity_check(u64 p, unsigned k_max, unsigned* first_failing_k) {
  if (!is_prime_u64(p))
    throw std::invalid_argument("euler_factor_identity_check: p must be prime");
  BigInt bp = p;
  for (unsigned k = 1; k <= k_max; ++k) {
    BigInt pk = boost::multiprecision::pow(bp, k);
    BigInt phi = pk - pk / p;
    BigInt sigma = (pk * p - 1) / (bp - 1);
    BigRat lhs(phi * sigma, pk * pk);
    BigRat rhs = 1 - BigRat(1, pk * p);
    if (lhs != rhs) {
      if (first_failing_k) *first_failing_k = k;
      return false;
    }
  }
  // (1 - 1/p) * (p/(p-1) - 1/(p^3 - p)) == 1 - 1/(p^2(p+1))
  BigRat closed = (1 - BigRat(1, bp)) * (BigRat(bp, bp - 1) - BigRat(1, bp * bp * bp - bp));
  BigRat euler = 1 - BigRat(1, bp * bp * (bp + 1));
  if (closed != euler) {
    if (first_failing_k) *first_failing_k = 0;
    return false;
  }
  return true;
}

}  // namespace gcdmap
