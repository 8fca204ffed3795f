#include "gcdmap/solution_param.hpp"

#include <sstream>
#include <stdexcept>

namespace gcdmap {

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n) {
  std::vector<std::pair<u64, unsigned>> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

Pair triple_to_pair(const SolutionTriple& t) {
  if (t.n == 0 || t.m == 0 || t.k == 0 || t.a_prime == 0)
    throw std::invalid_argument("triple_to_pair: all parameters must be >= 1");
  u64 nm = t.n * t.m;
  std::ostringstream bad;
  if (!(t.a_prime <= nm - 1))
    bad << "a' = " << t.a_prime << " outside [1, n*m - 1]";
  else if (gcd_nonneg(t.a_prime, nm) != 1)
    bad << "gcd(a', n*m) != 1";
  else if (gcd_nonneg(t.k, t.m) != 1)
    bad << "gcd(k, m) != 1";
  if (!bad.str().empty())
    throw std::invalid_argument("triple_to_pair: invalid triple: " + bad.str());
  u64 b_prime = nm - t.a_prime;
  return Pair(t.n * t.k * t.a_prime, t.n * t.k * b_prime);
}

SolutionTriple pair_to_triple(Pair p) {
  auto [d, ap, bp] = decompose(p);
  u64 s = ap + bp;
  u64 n = gcd_nonneg(d, s);
  return {n, s / n, ap, d / n};
}

PairSet enumerate_solutions(u64 n, u64 bound) {
  if (n == 0 || bound == 0)
    throw std::invalid_argument("enumerate_solutions: n and bound must be >= 1");
  PairSet out;
  // a + b = n*k * n*m, so n^2*k*m <= 2*bound bounds the loops.
  u128 cap = static_cast<u128>(2) * bound;
  for (u64 m = 1; static_cast<u128>(n) * n * m <= cap; ++m) {
    u64 nm = n * m;
    for (u64 k = 1; static_cast<u128>(n) * k * nm <= cap; ++k) {
      if (gcd_nonneg(k, m) != 1) continue;
      u64 nk = n * k;
      for (u64 ap = 1; ap < nm; ++ap) {
        if (gcd_nonneg(ap, nm) != 1) continue;
        u64 a = nk * ap;
        u64 b = nk * (nm - ap);
        if (a <= bound && b <= bound) out.emplace(a, b);
      }
    }
  }
  return out;
}

MinimalPair minimal_pair(u64 p, bool corrected) {
  if (!is_prime_u64(p)) throw std::invalid_argument("minimal_pair: p must be prime");
  if (p == 2) return {2, 2, 4};
  if (corrected) return {p, p * (p - 1), p * p};
  return {p, 2 * p, p * p};
}

namespace {

// Extended Euclid on signed 128-bit; returns gcd, sets x with a*x ~ g (mod b).
i128 ext_gcd(i128 a, i128 b, i128& x, i128& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  i128 x1, y1;
  i128 g = ext_gcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

// Combine r1 (mod m1), r2 (mod m2) for coprime moduli.
u64 crt_combine(u64 r1, u64 m1, u64 r2, u64 m2) {
  i128 x, y;
  ext_gcd(static_cast<i128>(m1), static_cast<i128>(m2), x, y);
  i128 m = static_cast<i128>(m1) * m2;
  i128 diff = static_cast<i128>(r2) - static_cast<i128>(r1);
  i128 t = (diff % m2) * x % m2;
  i128 res = (static_cast<i128>(r1) + t * m1) % m;
  if (res < 0) res += m;
  return static_cast<u64>(res);
}

}  // namespace

CrtFamily crt_family(u64 n, const std::vector<bool>& directions) {
  if (n < 2) throw std::invalid_argument("crt_family: n must be >= 2");
  auto factors = factorize(n);
  for (const auto& [p, e] : factors) {
    if (e > 1) {
      std::ostringstream msg;
      msg << "crt_family: n is not squarefree, divisible by " << p * p;
      throw std::invalid_argument(msg.str());
    }
  }
  if (directions.size() != factors.size())
    throw std::invalid_argument("crt_family: one direction per prime factor required");

  CrtFamily fam;
  fam.n = n;
  fam.directions = directions;
  u64 a0 = 0, b0 = 0, mod = 1;
  for (size_t i = 0; i < factors.size(); ++i) {
    u64 p = factors[i].first;
    MinimalPair mp = minimal_pair(p, /*corrected=*/true);
    u64 s = mp.s, t = mp.t;
    if (directions[i]) std::swap(s, t);
    fam.primes.push_back(p);
    a0 = crt_combine(a0, mod, s, mp.g);
    b0 = crt_combine(b0, mod, t, mp.g);
    mod *= mp.g;
  }
  fam.modulus = mod;
  fam.a0 = a0;
  fam.b0 = b0;
  return fam;
}

PairSet family_members(const CrtFamily& fam, u64 bound) {
  if (bound == 0) throw std::invalid_argument("family_members: bound must be >= 1");
  PairSet out;
  for (u64 a = fam.a0; a <= bound; a += fam.modulus) {
    if (a == 0) continue;
    for (u64 b = fam.b0; b <= bound; b += fam.modulus) {
      if (b == 0) continue;
      out.emplace(a, b);
    }
  }
  return out;
}

IntPair stabilizer_apply(StabilizerMatrix mat, IntPair v) {
  i64 s = mat.shear;
  return {(s + 1) * v.x + s * v.y, -s * v.x + (1 - s) * v.y};
}

}  // namespace gcdmap
