#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "gcdmap/density.hpp"

using namespace gcdmap;

TEST_CASE("naive density reproduces the small-n table") {
  CHECK(rho_exact_naive(1).rho() == 1.0);
  CHECK(rho_exact_naive(2).rho() == 0.75);
  DensityReport r6 = rho_exact_naive(6);
  CHECK(r6.ones_count == 29);
  CHECK(r6.rho_decimal() == "0.805556");
  DensityReport r10 = rho_exact_naive(10);
  CHECK(r10.ones_count == 87);
  CHECK(r10.rho_decimal() == "0.870000");
}

TEST_CASE("fast and naive counts agree") {
  for (u64 n : {1, 2, 3, 7, 10, 50, 101, 250, 500}) {
    REQUIRE(rho_exact_fast(n).ones_count == rho_exact_naive(n).ones_count);
  }
  for (u64 n : {1, 10, 60, 150}) {
    REQUIRE(rho_exact_fast(n, 2).ones_count == rho_exact_naive(n, 2).ones_count);
    REQUIRE(rho_exact_fast(n, 3).ones_count == rho_exact_naive(n, 3).ones_count);
  }
}

TEST_CASE("fast counts are thread-count invariant") {
  u64 reference = rho_exact_fast(700, 1, 1).ones_count;
  for (unsigned threads : {2u, 3u, 8u})
    REQUIRE(rho_exact_fast(700, 1, threads).ones_count == reference);
}

TEST_CASE("ones count is monotone in n") {
  u64 prev = 0;
  for (u64 n = 1; n <= 150; ++n) {
    u64 ones = rho_exact_naive(n).ones_count;
    REQUIRE(ones >= prev);
    prev = ones;
  }
}

TEST_CASE("r >= 2 shortcut is gated on the self-check") {
  CHECK(fr_unit_iff_coprime_verified(2));
  CHECK(fr_unit_iff_coprime_verified(3));
  CHECK_FALSE(fr_unit_iff_coprime_verified(1));
}

TEST_CASE("heatmap grid") {
  auto g2 = heatmap_grid(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0] == std::vector<u64>{1, 1});
  CHECK(g2[1] == std::vector<u64>{1, 2});

  auto g3 = heatmap_grid(3);
  u64 ones = 0;
  for (const auto& row : g3)
    for (u64 v : row)
      if (v == 1) ++ones;
  CHECK(ones == 8);
  CHECK(g3[1][1] == 2);

  auto g = heatmap_grid(200);
  for (u64 i = 0; i < 200; ++i)
    for (u64 j = 0; j < 200; ++j) REQUIRE(g[i][j] == g[j][i]);
}

TEST_CASE("sampled estimates are deterministic") {
  DensityReport a = rho_sampled(1000, 1, 20000, 7);
  DensityReport b = rho_sampled(1000, 1, 20000, 7);
  CHECK(a.ones_count == b.ones_count);
  CHECK(a.ci_low == b.ci_low);
  CHECK(a.ci_high == b.ci_high);
  DensityReport c = rho_sampled(1000, 1, 20000, 8);
  CHECK(a.ones_count != c.ones_count);  // different seed, different stream
}

TEST_CASE("sampling n = 1 gives exactly one") {
  DensityReport rep = rho_sampled(1, 1, 5000, 123);
  CHECK(rep.ones_count == 5000);
  CHECK(rep.rho() == 1.0);
}

TEST_CASE("sampled estimate lands near the exact density") {
  // n = 10 has exact density 0.87.
  DensityReport rep = rho_sampled(10, 1, 1000000, 1);
  double se = std::sqrt(0.87 * 0.13 / 1e6);
  CHECK(std::fabs(rep.rho() - 0.87) < 3 * se);
}

TEST_CASE("95% interval covers the exact density for most seeds") {
  double exact = rho_exact_naive(100).rho();
  int covered = 0;
  for (u64 seed = 1; seed <= 100; ++seed) {
    DensityReport rep = rho_sampled(100, 1, 10000, seed);
    if (rep.ci_low <= exact && exact <= rep.ci_high) ++covered;
  }
  CHECK(covered >= 90);
}

TEST_CASE("sweep preserves input order") {
  auto reps = rho_sweep({5, 2, 9}, 1, DensityMethod::naive);
  REQUIRE(reps.size() == 3);
  CHECK(reps[0].n == 5);
  CHECK(reps[1].n == 2);
  CHECK(reps[2].n == 9);
}
