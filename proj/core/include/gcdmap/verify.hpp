#pragma once

#include <string>
#include <vector>

#include "gcdmap/solution_param.hpp"

namespace gcdmap {

enum class Verdict { holds, fails, measured };

std::string verdict_name(Verdict v);

struct Counterexample {
  u64 a;
  u64 b;
  std::string observed;
  std::string detail;
};

// A theorem-level claim turned into a pass/fail/measured finding.
// verdict == fails implies counterexamples is nonempty, and every listed
// counterexample re-verifies under direct evaluation.
struct ClaimReport {
  std::string claim_id;
  std::vector<std::pair<std::string, std::string>> parameters;
  Verdict verdict = Verdict::holds;
  std::vector<Counterexample> counterexamples;
  std::vector<std::pair<std::string, u64>> coverage;
};

// Exhaustive { (a, b) <= bound : f(a, b) = n }.
PairSet oracle_solution_set(u64 n, u64 bound);

// Holds iff the triple enumerator reproduces the oracle set and every oracle
// solution round-trips through its triple.
ClaimReport check_thm_2_3(u64 n, u64 bound);

// Measured: family members are checked for the refined
// divisibility-with-valuation property (a violation is a hard failure),
// exact-equality failures (f a proper multiple of n) and oracle solutions
// outside every family are recorded.
ClaimReport check_thm_2_1(u64 n, u64 bound);

// Holds iff rho(n, r) is within 10*log(n+1)/n of 6/pi^2 and the ones count
// equals the coprime-pair count. The envelope is a report threshold, not a
// stated convergence rate.
ClaimReport check_fr_density(u64 n, unsigned r);

// Compares the literal coprime-pair formula 1 + 2*sum phi and the corrected
// 2*sum phi - 1 against exhaustive enumeration; records which matches.
ClaimReport check_eq_16(u64 N);

// Holds iff a^r + b^r equals the product of homogenized cyclotomic factors
// for all r <= r_max, a, b <= ab_max.
ClaimReport check_power_identity(u64 r_max, u64 ab_max);

}  // namespace gcdmap
