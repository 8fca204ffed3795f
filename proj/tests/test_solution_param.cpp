#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gcdmap/solution_param.hpp"

using namespace gcdmap;

namespace {

// Independent brute-force oracle, kept local to the test.
PairSet brute_solutions(u64 n, u64 bound) {
  PairSet out;
  for (u64 a = 1; a <= bound; ++a)
    for (u64 b = 1; b <= bound; ++b)
      if (f_eval(Pair(a, b)) == n) out.emplace(a, b);
  return out;
}

u64 splitmix(u64& state) {
  u64 z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace

TEST_CASE("triple_to_pair examples") {
  Pair p1 = triple_to_pair({6, 1, 5, 1});
  CHECK(p1.a == 30);
  CHECK(p1.b == 6);
  Pair p2 = triple_to_pair({6, 1, 5, 3});
  CHECK(p2.a == 90);
  CHECK(p2.b == 18);
  CHECK(f_eval(p2) == 6);
  Pair p3 = triple_to_pair({1, 2, 1, 1});
  CHECK(p3.a == 1);
  CHECK(p3.b == 1);
}

TEST_CASE("triple_to_pair reports the failing invariant") {
  CHECK_THROWS_WITH_AS(triple_to_pair({6, 1, 2, 1}),
                       doctest::Contains("gcd(a', n*m)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(triple_to_pair({6, 2, 1, 2}),
                       doctest::Contains("gcd(k, m)"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(triple_to_pair({6, 1, 7, 1}),
                       doctest::Contains("outside"), std::invalid_argument);
}

TEST_CASE("pair_to_triple examples") {
  SolutionTriple t = pair_to_triple(Pair(30, 6));
  CHECK(t.n == 6);
  CHECK(t.m == 1);
  CHECK(t.a_prime == 5);
  CHECK(t.k == 1);
  t = pair_to_triple(Pair(90, 18));
  CHECK(t.n == 6);
  CHECK(t.k == 3);
  t = pair_to_triple(Pair(1, 1));
  CHECK(t.n == 1);
  CHECK(t.m == 2);
  CHECK(t.a_prime == 1);
  CHECK(t.k == 1);
}

TEST_CASE("round trip on all pairs up to 300, with automatic coprimality") {
  for (u64 a = 1; a <= 300; ++a)
    for (u64 b = 1; b <= 300; ++b) {
      SolutionTriple t = pair_to_triple(Pair(a, b));
      REQUIRE(gcd_nonneg(t.k, t.m) == 1);
      Pair back = triple_to_pair(t);
      REQUIRE(back.a == a);
      REQUIRE(back.b == b);
    }
}

TEST_CASE("enumerate_solutions examples") {
  CHECK(enumerate_solutions(2, 3) == PairSet{{2, 2}});
  CHECK(enumerate_solutions(1, 2) == PairSet{{1, 1}, {1, 2}, {2, 1}});
  CHECK(enumerate_solutions(6, 35) == PairSet{{6, 30}, {30, 6}});
}

TEST_CASE("enumerate_solutions equals the brute-force oracle") {
  for (u64 n = 1; n <= 8; ++n)
    REQUIRE(enumerate_solutions(n, 200) == brute_solutions(n, 200));
}

TEST_CASE("minimal_pair") {
  MinimalPair mp = minimal_pair(2, true);
  CHECK(mp.s == 2);
  CHECK(mp.t == 2);
  CHECK(mp.g == 4);
  mp = minimal_pair(2, false);
  CHECK(mp.t == 2);
  mp = minimal_pair(5, true);
  CHECK(mp.s == 5);
  CHECK(mp.t == 20);
  CHECK(mp.g == 25);
  CHECK(f_eval(Pair(5, 20)) == 5);
  mp = minimal_pair(5, false);
  CHECK(mp.t == 10);
  // The literal theorem data does not solve f = p for p >= 5.
  CHECK(f_eval(Pair(5, 10)) == 1);
  CHECK_THROWS_AS(minimal_pair(6, true), std::invalid_argument);
}

TEST_CASE("crt_family reproduces the n = 6 worked example") {
  CrtFamily fam = crt_family(6, {false, false});
  CHECK(fam.modulus == 36);
  CHECK(fam.a0 == 30);
  CHECK(fam.b0 == 6);
  CrtFamily swapped = crt_family(6, {false, true});
  CHECK(swapped.a0 == 6);
  CHECK(swapped.b0 == 30);
  CrtFamily two = crt_family(2, {false});
  CHECK(two.modulus == 4);
  CHECK(two.a0 == 2);
  CHECK(two.b0 == 2);
}

TEST_CASE("crt_family rejects non-squarefree n with the offending square") {
  CHECK_THROWS_WITH_AS(crt_family(12, {false, false}), doctest::Contains("4"),
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(crt_family(18, {false, false}), doctest::Contains("9"),
                       std::invalid_argument);
}

TEST_CASE("family_members") {
  CrtFamily fam = crt_family(6, {false, false});
  CHECK(family_members(fam, 80) ==
        PairSet{{30, 6}, {66, 6}, {30, 42}, {66, 42}, {30, 78}, {66, 78}});
  CrtFamily two = crt_family(2, {false});
  CHECK(family_members(two, 6) == PairSet{{2, 2}, {6, 2}, {2, 6}, {6, 6}});
  CHECK(family_members(fam, 5).empty());
}

TEST_CASE("family members have f divisible by n") {
  for (u64 n : {2, 3, 6, 10}) {
    size_t k = factorize(n).size();
    for (u64 mask = 0; mask < (u64{1} << k); ++mask) {
      std::vector<bool> dirs(k);
      for (size_t i = 0; i < k; ++i) dirs[i] = (mask >> i) & 1;
      CrtFamily fam = crt_family(n, dirs);
      for (const auto& [a, b] : family_members(fam, 2000))
        REQUIRE(f_eval_fast(Pair(a, b)) % n == 0);
    }
  }
}

TEST_CASE("stabilizer_apply examples") {
  IntPair id = stabilizer_apply({0}, {5, 9});
  CHECK(id.x == 5);
  CHECK(id.y == 9);
  IntPair s1 = stabilizer_apply({1}, {1, 2});
  CHECK(s1.x == 4);
  CHECK(s1.y == -1);
  IntPair sm1 = stabilizer_apply({-1}, {3, 4});
  CHECK(sm1.x == -4);
  CHECK(sm1.y == 11);
}

TEST_CASE("stabilizer preserves x + y and gcd for random primitive pairs") {
  u64 state = 42;
  int done = 0;
  while (done < 100) {
    i64 x = static_cast<i64>(splitmix(state) % 2000) - 1000;
    i64 y = static_cast<i64>(splitmix(state) % 2000) - 1000;
    if (x == 0 && y == 0) continue;
    if (gcd_nonneg(static_cast<u64>(std::abs(x)), static_cast<u64>(std::abs(y))) != 1) continue;
    ++done;
    for (i64 shear = -50; shear <= 50; ++shear) {
      IntPair w = stabilizer_apply({shear}, {x, y});
      REQUIRE(w.x + w.y == x + y);
      REQUIRE(gcd_nonneg(static_cast<u64>(std::abs(w.x)),
                         static_cast<u64>(std::abs(w.y))) == 1);
    }
  }
}
