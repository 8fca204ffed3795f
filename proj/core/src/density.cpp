#include "gcdmap/density.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "gcdmap/core_arith.hpp"
#include "gcdmap/format.hpp"

namespace gcdmap {

std::string DensityReport::rho_decimal() const { return format_fixed(rho_num, rho_den, 6); }

namespace {

void reduce_into(DensityReport& rep) {
  u64 g = gcd_nonneg(rep.ones_count, rep.total);
  if (g == 0) g = 1;
  rep.rho_num = rep.ones_count / g;
  rep.rho_den = rep.total / g;
}

bool fr_is_one_direct(u64 a, u64 b, unsigned r) {
  return f_r_eval(Pair(a, b), r) == 1;
}

}  // namespace

bool fr_unit_iff_coprime_verified(unsigned r) {
  if (r < 2) return false;
  static std::map<unsigned, bool> cache;
  static std::mutex cache_mutex;
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(r);
  if (it != cache.end()) return it->second;
  bool ok = true;
  for (u64 a = 1; a <= 200 && ok; ++a)
    for (u64 b = 1; b <= 200; ++b)
      if (fr_is_one_direct(a, b, r) != (gcd_nonneg(a, b) == 1)) {
        ok = false;
        break;
      }
  cache[r] = ok;
  return ok;
}

DensityReport rho_exact_naive(u64 n, unsigned r) {
  if (n == 0 || r == 0) throw std::invalid_argument("rho_exact_naive: n, r must be >= 1");
  DensityReport rep;
  rep.n = n;
  rep.r = r;
  rep.method = DensityMethod::naive;
  rep.total = n * n;
  u64 ones = 0;
  for (u64 a = 1; a <= n; ++a)
    for (u64 b = 1; b <= n; ++b) {
      if (r == 1) {
        u128 prod = static_cast<u128>(a) * b;
        u128 sum = static_cast<u128>(a) + b;
        if (gcd_u128(prod, sum) == gcd_nonneg(a, b)) ++ones;
      } else if (fr_is_one_direct(a, b, r)) {
        ++ones;
      }
    }
  rep.ones_count = ones;
  reduce_into(rep);
  return rep;
}

DensityReport rho_exact_fast(u64 n, unsigned r, unsigned threads) {
  if (n == 0 || r == 0) throw std::invalid_argument("rho_exact_fast: n, r must be >= 1");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  // Kernel selection: r = 1 uses the gcd(d, a'+b') identity; r >= 2 uses the
  // coprimality shortcut once self-checked, otherwise direct evaluation.
  const bool shortcut = (r >= 2) && fr_unit_iff_coprime_verified(r);
  auto is_one = [r, shortcut](u64 a, u64 b) -> bool {
    if (r == 1) return f1_kernel(a, b) == 1;
    if (shortcut) return gcd_nonneg(a, b) == 1;
    return fr_is_one_direct(a, b, r);
  };

  // Strict upper triangle (a < b), row-tiled; each tile's count lands in a
  // preassigned slot so the reduction order is fixed.
  constexpr u64 kTileRows = 256;
  const u64 tile_count = (n + kTileRows - 1) / kTileRows;
  std::vector<u64> tile_ones(tile_count, 0);
  std::atomic<u64> next_tile{0};
  auto worker = [&]() {
    for (;;) {
      u64 t = next_tile.fetch_add(1);
      if (t >= tile_count) return;
      u64 lo = t * kTileRows + 1;
      u64 hi = std::min(n, lo + kTileRows - 1);
      u64 ones = 0;
      for (u64 b = lo; b <= hi; ++b)
        for (u64 a = 1; a < b; ++a)
          if (is_one(a, b)) ++ones;
      tile_ones[t] = ones;
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  u64 triangle = 0;
  for (u64 c : tile_ones) triangle += c;
  u64 diagonal = 0;
  for (u64 a = 1; a <= n; ++a)
    if (is_one(a, a)) ++diagonal;

  DensityReport rep;
  rep.n = n;
  rep.r = r;
  rep.method = DensityMethod::fast;
  rep.total = n * n;
  rep.ones_count = 2 * triangle + diagonal;
  reduce_into(rep);
  return rep;
}

namespace {

struct SplitMix64 {
  u64 state;
  u64 next() {
    u64 z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  // Unbiased draw from [1, n]: accept only the range whose size is a
  // multiple of n.
  u64 uniform(u64 n) {
    if (n == 1) return 1;
    u64 threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
      u64 v = next();
      if (v >= threshold) return v % n + 1;
    }
  }
};

}  // namespace

DensityReport rho_sampled(u64 n, unsigned r, u64 samples, u64 seed) {
  if (n == 0 || r == 0 || samples == 0)
    throw std::invalid_argument("rho_sampled: n, r, samples must be >= 1");
  const bool shortcut = (r >= 2) && fr_unit_iff_coprime_verified(r);
  SplitMix64 rng{seed};
  u64 hits = 0;
  for (u64 i = 0; i < samples; ++i) {
    u64 a = rng.uniform(n);
    u64 b = rng.uniform(n);
    bool one;
    if (r == 1) one = f1_kernel(a, b) == 1;
    else if (shortcut) one = gcd_nonneg(a, b) == 1;
    else one = fr_is_one_direct(a, b, r);
    if (one) ++hits;
  }
  DensityReport rep;
  rep.n = n;
  rep.r = r;
  rep.method = DensityMethod::sample;
  rep.ones_count = hits;
  rep.total = samples;
  rep.samples = samples;
  rep.seed = seed;
  reduce_into(rep);
  double p = static_cast<double>(hits) / static_cast<double>(samples);
  double half = 1.959963984540054 * std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
  rep.ci_low = p - half;
  rep.ci_high = p + half;
  return rep;
}

std::vector<DensityReport> rho_sweep(const std::vector<u64>& ns, unsigned r,
                                     DensityMethod method, u64 samples, u64 seed) {
  if (ns.empty()) throw std::invalid_argument("rho_sweep: ns must be nonempty");
  std::vector<DensityReport> out;
  out.reserve(ns.size());
  for (u64 n : ns) {
    switch (method) {
      case DensityMethod::naive: out.push_back(rho_exact_naive(n, r)); break;
      case DensityMethod::fast: out.push_back(rho_exact_fast(n, r)); break;
      case DensityMethod::sample: out.push_back(rho_sampled(n, r, samples, seed)); break;
    }
  }
  return out;
}

std::vector<std::vector<u64>> heatmap_grid(u64 n, unsigned r) {
  if (n == 0 || r == 0) throw std::invalid_argument("heatmap_grid: n, r must be >= 1");
  std::vector<std::vector<u64>> grid(n, std::vector<u64>(n));
  for (u64 b = 1; b <= n; ++b)
    for (u64 a = 1; a <= n; ++a) {
      if (r == 1) {
        grid[b - 1][a - 1] = f1_kernel(a, b);
      } else {
        grid[b - 1][a - 1] = f_r_eval(Pair(a, b), r).convert_to<u64>();
      }
    }
  return grid;
}

}  // namespace gcdmap
