#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gcdmap/analytic_sums.hpp"
#include "gcdmap/core_arith.hpp"

using namespace gcdmap;

namespace {

ArithFn table_fn(const ArithTables& t, bool mobius) {
  if (mobius)
    return {[&t](u64 n) { return static_cast<i64>(t.mu[n]); },
            [&t](u64 x) { return static_cast<i128>(t.mertens[x]); }};
  return {[](u64) { return i64{1}; }, [](u64 x) { return static_cast<i128>(x); }};
}

ArithFn identity_fn() {
  return {[](u64 n) { return static_cast<i64>(n); },
          [](u64 x) { return static_cast<i128>(x) * (x + 1) / 2; }};
}

// Direct double loop over the convolution, the independent oracle.
i128 direct_convolution_sum(const ArithFn& g, const ArithFn& h, u64 n) {
  i128 total = 0;
  for (u64 x = 1; x <= n; ++x)
    for (u64 y = 1; x * y <= n; ++y) total += static_cast<i128>(g.point(x)) * h.point(y);
  return total;
}

}  // namespace

TEST_CASE("sieve tables: spot values") {
  ArithTables t = sieve_tables(1000);
  CHECK(t.phi[1] == 1);
  CHECK(t.sigma[1] == 1);
  CHECK(t.mu[1] == 1);
  CHECK(t.phi[10] == 4);
  CHECK(t.sigma[10] == 18);
  CHECK(t.mu[10] == 1);
  CHECK(t.mu[12] == 0);
  CHECK(t.phi[997] == 996);  // prime
  // sum_{d|n} phi(d) = n
  for (u64 n = 1; n <= 1000; ++n) {
    u64 s = 0;
    for (u64 d = 1; d <= n; ++d)
      if (n % d == 0) s += t.phi[d];
    REQUIRE(s == n);
  }
}

TEST_CASE("hyperbola sum examples") {
  ArithTables t = sieve_tables(100);
  ArithFn one = table_fn(t, false);
  ArithFn mu = table_fn(t, true);
  ArithFn ident = identity_fn();
  CHECK(hyperbola_sum(one, one, 10, 3) == 27);  // sum of d(k), k <= 10
  CHECK(hyperbola_sum(mu, ident, 10, 3) == 32); // sum of phi(k), k <= 10
  CHECK(hyperbola_sum(one, one, 1, 1) == 1);
  CHECK_THROWS_AS(hyperbola_sum(one, one, 10, 11), std::invalid_argument);
}

TEST_CASE("hyperbola sum is split-independent and matches the direct loop") {
  ArithTables t = sieve_tables(1000);
  std::vector<std::pair<ArithFn, ArithFn>> pairs;
  pairs.emplace_back(table_fn(t, false), table_fn(t, false));
  pairs.emplace_back(table_fn(t, true), identity_fn());
  pairs.emplace_back(table_fn(t, true), table_fn(t, false));
  for (u64 n : {1, 2, 3, 10, 30, 100, 555, 1000}) {
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    if (root == 0) root = 1;
    for (const auto& [g, h] : pairs) {
      i128 expected = direct_convolution_sum(g, h, n);
      for (u64 split : {u64{1}, root, n})
        REQUIRE(hyperbola_sum(g, h, n, split) == expected);
    }
  }
}

TEST_CASE("totient summatory: sieve and hyperbola agree exactly") {
  CHECK(totient_summatory(1, SummatoryMethod::sieve) == 1);
  CHECK(totient_summatory(10, SummatoryMethod::sieve) == 32);
  CHECK(totient_summatory(100, SummatoryMethod::hyperbola) == 3044);
  ArithTables t = sieve_tables(5000);
  for (u64 x = 1; x <= 5000; ++x)
    REQUIRE(totient_summatory(t, x, SummatoryMethod::sieve) ==
            totient_summatory(t, x, SummatoryMethod::hyperbola));
}

TEST_CASE("mertens partial sums") {
  CHECK(mertens_partial(1) == 1);
  CHECK(mertens_partial(2) == 0);
  CHECK(mertens_partial(10) == -1);
}

TEST_CASE("coprime pair count matches exhaustive enumeration") {
  CHECK(coprime_pair_count(1) == 1);
  CHECK(coprime_pair_count(2) == 3);
  CHECK(coprime_pair_count(4) == 11);
  ArithTables t = sieve_tables(500);
  for (u64 N : {3, 10, 77, 300, 500}) {
    i128 brute = 0;
    for (u64 a = 1; a <= N; ++a)
      for (u64 b = 1; b <= N; ++b)
        if (gcd_nonneg(a, b) == 1) ++brute;
    REQUIRE(coprime_pair_count(t, N) == brute);
  }
}

TEST_CASE("error term scan") {
  ArithTables t = sieve_tables(1000);
  auto rows = error_term_scan(t, {1, 10, 1000});
  const long double pi2 = std::acos(-1.0L) * std::acos(-1.0L);
  CHECK(std::fabs(static_cast<double>(rows[0].error - (1.0L - 3.0L / pi2))) < 1e-12);
  CHECK(std::fabs(static_cast<double>(rows[1].error - (32.0L - 300.0L / pi2))) < 1e-12);
  CHECK(rows[1].error > 1.5);
  CHECK(rows[1].error < 1.7);
}

TEST_CASE("moebius inversion anchor: zeta2 partial times mu/n^2 partial") {
  ArithTables t = sieve_tables(1000000);
  long double zeta2 = 0, musum = 0;
  for (u64 n = 1; n <= 1000000; ++n) {
    long double inv = 1.0L / (static_cast<long double>(n) * n);
    zeta2 += inv;
    musum += t.mu[n] * inv;
  }
  CHECK(std::fabs(static_cast<double>(zeta2 * musum - 1.0L)) < 1e-5);
}
