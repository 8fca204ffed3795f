#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gcdmap/numeric.hpp"

namespace gcdmap {

// Sieved tables of mu, phi, sigma on [1, limit], plus prefix sums of mu
// (Mertens) and phi. Index 0 is unused.
struct ArithTables {
  u64 limit = 0;
  std::vector<std::int8_t> mu;
  std::vector<u32> phi;
  std::vector<u64> sigma;
  std::vector<i64> mertens;   // mertens[x] = sum_{n<=x} mu(n)
  std::vector<i64> phi_sum;   // phi_sum[x] = sum_{n<=x} phi(n)
};

ArithTables sieve_tables(u64 limit);

// An arithmetic function given by a point evaluator and an exact
// partial-sum evaluator S(t) = sum_{n<=t} f(n).
struct ArithFn {
  std::function<i64(u64)> point;
  std::function<i128(u64)> partial;
};

// Dirichlet hyperbola method: sum_{k<=n} (g*h)(k) via the split-sum
// identity with a = split, b = floor(n/split). Split-independent.
i128 hyperbola_sum(const ArithFn& g, const ArithFn& h, u64 n, u64 split);

enum class SummatoryMethod { sieve, hyperbola };

// Exact sum_{n<=x} phi(n). The hyperbola route uses phi = mu * N with
// split floor(sqrt(x)), triangular-number partial sums for N and Mertens
// partial sums for mu. Requires tables.limit >= x.
i128 totient_summatory(const ArithTables& tables, u64 x, SummatoryMethod method);
i128 totient_summatory(u64 x, SummatoryMethod method);

i64 mertens_partial(const ArithTables& tables, u64 x);
i64 mertens_partial(u64 x);

// Ordered pairs 1 <= a, b <= N with gcd(a, b) = 1, as 2*sum phi - 1.
i128 coprime_pair_count(const ArithTables& tables, u64 N);
i128 coprime_pair_count(u64 N);

struct ErrorTermRow {
  u64 x;
  long double error;  // sum phi - 3x^2/pi^2
  long double ratio;  // |error| / x^(3/2)
};

std::vector<ErrorTermRow> error_term_scan(const ArithTables& tables,
                                          const std::vector<u64>& xs);

}  // namespace gcdmap
