#pragma once

#include <string>
#include <vector>

#include "gcdmap/numeric.hpp"

namespace gcdmap {

// Dense integer polynomial, constant term first, trailing zeros stripped.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial x_pow_minus_one(u64 n);  // x^n - 1

  bool is_zero() const { return coeffs_.empty(); }
  i64 degree() const { return static_cast<i64>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  const BigInt& coeff(size_t i) const;

  IntPolynomial operator*(const IntPolynomial& rhs) const;
  bool operator==(const IntPolynomial& rhs) const = default;

  // Exact division; throws std::domain_error if the remainder is nonzero.
  IntPolynomial divide_exact(const IntPolynomial& divisor) const;

  std::string str() const;

 private:
  std::vector<BigInt> coeffs_;
};

// Phi_n via exact division of x^n - 1 by the proper-divisor cyclotomics.
// Memoized across calls; thread-safe.
IntPolynomial cyclotomic_poly(u64 n);

// b^deg * poly(a/b) = sum coeff_i a^i b^(deg-i).
BigInt homogenize_eval(const IntPolynomial& poly, const BigInt& a, const BigInt& b);

// { d : d | 2r, d does not divide r }, ascending; the cyclotomic indices
// in the factorization of x^r + 1.
std::vector<u64> factor_indices(u64 r);

// Exact check of a^r + b^r = prod Phi_d(a, b) over the factor indices.
// On mismatch (never expected) the sides are reported through lhs/rhs.
bool verify_power_identity(u64 r, u64 a, u64 b, BigInt* lhs = nullptr,
                           BigInt* rhs = nullptr);

struct GcdPowerCounterexample {
  u64 a;
  u64 b;
  std::string observed;
};

// Exhaustive scan of the section-4 gcd claims for a, b <= bound:
//   prime_support:  primes of gcd(a^r+b^r, ab) == primes of gcd(a, b)
//   literal:        gcd(a^r+b^r, ab) == gcd(a, b)
//   unit_iff_coprime: f_r(a, b) = 1  <=>  gcd(a, b) = 1
struct GcdPowerScanReport {
  u64 bound;
  unsigned r;
  bool prime_support_holds = true;
  bool literal_holds = true;
  bool unit_iff_coprime_holds = true;
  u64 literal_failures = 0;
  std::vector<GcdPowerCounterexample> prime_support_counterexamples;
  std::vector<GcdPowerCounterexample> literal_counterexamples;
  std::vector<GcdPowerCounterexample> unit_iff_coprime_counterexamples;
};

GcdPowerScanReport gcd_power_scan(u64 bound, unsigned r);

}  // namespace gcdmap
