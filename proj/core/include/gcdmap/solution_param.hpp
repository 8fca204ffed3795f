#pragma once

#include <set>
#include <utility>
#include <vector>

#include "gcdmap/core_arith.hpp"
#include "gcdmap/numeric.hpp"

namespace gcdmap {

using PairSet = std::set<std::pair<u64, u64>>;

// The three-parameter description of f(a, b) = n:
//   a = n*k*a',  b = n*k*(n*m - a'),
// with 1 <= a' <= n*m - 1, gcd(a', n*m) = 1, gcd(k, m) = 1.
struct SolutionTriple {
  u64 n;
  u64 m;
  u64 a_prime;
  u64 k;
};

// Minimal solution (s, t) for a single prime together with the progression
// gap g = p^2.
struct MinimalPair {
  u64 s;
  u64 t;
  u64 g;
};

// Arithmetic-progression family (a0 + alpha*G, b0 + beta*G) for squarefree n,
// built from per-prime congruences mod p^2 combined by CRT. One direction
// bit per prime decides whether (s, t) is swapped in the congruences.
struct CrtFamily {
  u64 n;
  std::vector<u64> primes;
  std::vector<bool> directions;
  u64 modulus;  // G = product of p^2
  u64 a0;
  u64 b0;
};

// Signed pair: stabilizer images may leave the positive quadrant.
struct IntPair {
  i64 x;
  i64 y;
};

// Unimodular matrix with rows (b+1, b) and (-b, 1-b); both column sums are 1,
// so x + y is preserved.
struct StabilizerMatrix {
  i64 shear;
};

Pair triple_to_pair(const SolutionTriple& t);
SolutionTriple pair_to_triple(Pair p);

// Exactly { (a, b) : a, b <= bound, f(a, b) = n }, generated from triples
// with n*k*n*m <= 2*bound and filtered to the box.
PairSet enumerate_solutions(u64 n, u64 bound);

// corrected=false: the literal data ((2,2,4) for p=2, (p, 2p, p^2) otherwise).
// corrected=true:  (p, p*(p-1), p^2) for every prime; identical at p=2.
// The uncorrected odd-prime pairs do not satisfy f(s, t) = p for p >= 5 and
// are kept only for claim checking.
MinimalPair minimal_pair(u64 p, bool corrected);

CrtFamily crt_family(u64 n, const std::vector<bool>& directions);

PairSet family_members(const CrtFamily& fam, u64 bound);

IntPair stabilizer_apply(StabilizerMatrix mat, IntPair v);

// Small helpers shared across modules.
bool is_prime_u64(u64 n);
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

}  // namespace gcdmap
