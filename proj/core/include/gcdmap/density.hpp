#pragma once

#include <string>
#include <vector>

#include "gcdmap/numeric.hpp"

namespace gcdmap {

enum class DensityMethod { naive, fast, sample };

struct DensityReport {
  u64 n = 0;
  unsigned r = 1;
  DensityMethod method = DensityMethod::naive;
  u64 ones_count = 0;  // hit count for sampled estimates
  u64 total = 0;       // n^2, or the sample count
  u64 rho_num = 0;     // ones_count/total reduced to lowest terms
  u64 rho_den = 1;
  u64 samples = 0;
  u64 seed = 0;
  double ci_low = 0.0;   // 95% normal-approximation interval (sample only)
  double ci_high = 0.0;

  double rho() const {
    return static_cast<double>(rho_num) / static_cast<double>(rho_den);
  }
  // 6 decimal places, round-half-even.
  std::string rho_decimal() const;
};

// Reference double loop over the full grid; intended for n up to a few
// thousand.
DensityReport rho_exact_naive(u64 n, unsigned r = 1);

// Same count via the gcd(d, a'+b') kernel, triangle+diagonal symmetry and
// tiled parallel counting. Bit-identical for any thread count. For r >= 2
// the coprimality shortcut is used only after a one-time self-check against
// direct evaluation on a 200x200 grid.
DensityReport rho_exact_fast(u64 n, unsigned r = 1, unsigned threads = 0);

// Deterministic Monte Carlo estimate: pairs drawn uniformly from [1, n]^2
// by a splitmix64 stream (a then b per sample, modulo-rejection for
// uniformity).
DensityReport rho_sampled(u64 n, unsigned r, u64 samples, u64 seed);

std::vector<DensityReport> rho_sweep(const std::vector<u64>& ns, unsigned r,
                                     DensityMethod method,
                                     u64 samples = 0, u64 seed = 0);

// Grid of f_r values; entry [b-1][a-1] = f_r(a, b). Symmetric.
std::vector<std::vector<u64>> heatmap_grid(u64 n, unsigned r = 1);

// True when f_r(a,b) = 1 <=> gcd(a,b) = 1 has been confirmed for this r on
// the reference grid (gates the fast path's shortcut).
bool fr_unit_iff_coprime_verified(unsigned r);

}  // namespace gcdmap
