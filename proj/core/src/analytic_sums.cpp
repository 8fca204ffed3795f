#include "gcdmap/analytic_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace gcdmap {

ArithTables sieve_tables(u64 limit) {
  if (limit == 0) throw std::invalid_argument("sieve_tables: limit must be >= 1");
  ArithTables t;
  t.limit = limit;
  t.mu.assign(limit + 1, 0);
  t.phi.assign(limit + 1, 0);
  t.sigma.assign(limit + 1, 0);
  t.mu[1] = 1;
  t.phi[1] = 1;

  // Linear sieve for mu and phi.
  std::vector<u32> primes;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(static_cast<u32>(i));
      t.mu[i] = -1;
      t.phi[i] = static_cast<u32>(i - 1);
    }
    for (u32 p : primes) {
      u64 ip = i * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        t.mu[ip] = 0;
        t.phi[ip] = t.phi[i] * p;
        break;
      }
      t.mu[ip] = static_cast<std::int8_t>(-t.mu[i]);
      t.phi[ip] = t.phi[i] * (p - 1);
    }
  }

  // sigma by the divisor-harmonic loop.
  for (u64 d = 1; d <= limit; ++d)
    for (u64 m = d; m <= limit; m += d) t.sigma[m] += d;

  t.mertens.assign(limit + 1, 0);
  t.phi_sum.assign(limit + 1, 0);
  for (u64 n = 1; n <= limit; ++n) {
    t.mertens[n] = t.mertens[n - 1] + t.mu[n];
    t.phi_sum[n] = t.phi_sum[n - 1] + t.phi[n];
  }
  return t;
}

i128 hyperbola_sum(const ArithFn& g, const ArithFn& h, u64 n, u64 split) {
  if (n == 0) return 0;
  if (split < 1 || split > n)
    throw std::invalid_argument("hyperbola_sum: split must lie in [1, n]");
  u64 a = split;
  u64 b = n / a;
  i128 total = 0;
  for (u64 x = 1; x <= a; ++x) total += static_cast<i128>(g.point(x)) * h.partial(n / x);
  for (u64 y = 1; y <= b; ++y) total += static_cast<i128>(h.point(y)) * g.partial(n / y);
  total -= g.partial(a) * h.partial(b);
  return total;
}

namespace {

inline i128 triangular(u64 t) {
  return static_cast<i128>(t) * (t + 1) / 2;
}

}  // namespace

i128 totient_summatory(const ArithTables& tables, u64 x, SummatoryMethod method) {
  if (x == 0) return 0;
  if (tables.limit < x)
    throw std::invalid_argument("totient_summatory: tables too small for x");
  if (method == SummatoryMethod::sieve) return tables.phi_sum[x];

  ArithFn mu{[&tables](u64 n) { return static_cast<i64>(tables.mu[n]); },
             [&tables](u64 t) { return static_cast<i128>(tables.mertens[t]); }};
  ArithFn ident{[](u64 n) { return static_cast<i64>(n); },
                [](u64 t) { return triangular(t); }};
  u64 split = static_cast<u64>(std::sqrt(static_cast<long double>(x)));
  while (split * split > x) --split;
  while ((split + 1) * (split + 1) <= x) ++split;
  if (split == 0) split = 1;
  return hyperbola_sum(mu, ident, x, split);
}

i128 totient_summatory(u64 x, SummatoryMethod method) {
  ArithTables tables = sieve_tables(x == 0 ? 1 : x);
  return totient_summatory(tables, x, method);
}

i64 mertens_partial(const ArithTables& tables, u64 x) {
  if (x == 0) return 0;
  if (tables.limit < x)
    throw std::invalid_argument("mertens_partial: tables too small for x");
  return tables.mertens[x];
}

i64 mertens_partial(u64 x) {
  ArithTables tables = sieve_tables(x == 0 ? 1 : x);
  return mertens_partial(tables, x);
}

i128 coprime_pair_count(const ArithTables& tables, u64 N) {
  if (N == 0) throw std::invalid_argument("coprime_pair_count: N must be >= 1");
  return 2 * totient_summatory(tables, N, SummatoryMethod::sieve) - 1;
}

i128 coprime_pair_count(u64 N) {
  ArithTables tables = sieve_tables(N);
  return coprime_pair_count(tables, N);
}

std::vector<ErrorTermRow> error_term_scan(const ArithTables& tables,
                                          const std::vector<u64>& xs) {
  const long double pi = std::acos(-1.0L);
  const long double pi2 = pi * pi;
  std::vector<ErrorTermRow> rows;
  rows.reserve(xs.size());
  for (u64 x : xs) {
    i128 s = totient_summatory(tables, x, SummatoryMethod::sieve);
    long double main = 3.0L * static_cast<long double>(x) * static_cast<long double>(x) / pi2;
    long double e = static_cast<long double>(s) - main;
    long double ratio = std::fabs(e) / std::pow(static_cast<long double>(x), 1.5L);
    rows.push_back({x, e, ratio});
  }
  return rows;
}

}  // namespace gcdmap
