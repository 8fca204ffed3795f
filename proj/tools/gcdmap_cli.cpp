// Command-line front end: every library operation behind one binary with
// stable JSON-lines (default) or CSV output.
//
// Exit codes: 0 success, 1 usage error, 2 computation error,
// 3 failed claim under `verify --strict`.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcdmap/analytic_sums.hpp"
#include "gcdmap/core_arith.hpp"
#include "gcdmap/cyclotomic.hpp"
#include "gcdmap/density.hpp"
#include "gcdmap/euler_constants.hpp"
#include "gcdmap/format.hpp"
#include "gcdmap/solution_param.hpp"
#include "gcdmap/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gcdmap;

namespace {

json big_to_json(const BigInt& v) {
  if (v >= 0 && v <= BigInt(std::numeric_limits<u64>::max()))
    return v.convert_to<u64>();
  if (v < 0 && v >= BigInt(std::numeric_limits<i64>::min()))
    return v.convert_to<i64>();
  return v.str();
}

json i128_to_json(i128 v) {
  if (v >= 0 && v <= static_cast<i128>(std::numeric_limits<u64>::max()))
    return static_cast<u64>(v);
  return to_string(v);
}

void emit(const json& record) { std::cout << record.dump() << "\n"; }

std::string method_name(DensityMethod m) {
  switch (m) {
    case DensityMethod::naive: return "naive";
    case DensityMethod::fast: return "fast";
    case DensityMethod::sample: return "sample";
  }
  return "?";
}

json density_record(const DensityReport& rep) {
  json rec;
  rec["n"] = rep.n;
  rec["r"] = rep.r;
  rec["method"] = method_name(rep.method);
  rec["ones"] = rep.ones_count;
  rec["total"] = rep.total;
  rec["rho_num"] = rep.rho_num;
  rec["rho_den"] = rep.rho_den;
  rec["rho"] = rep.rho_decimal();
  if (rep.method == DensityMethod::sample) {
    rec["samples"] = rep.samples;
    rec["seed"] = rep.seed;
    rec["ci_low"] = rep.ci_low;
    rec["ci_high"] = rep.ci_high;
  }
  return rec;
}

json claim_record(const ClaimReport& rep) {
  json rec;
  rec["claim"] = rep.claim_id;
  rec["verdict"] = verdict_name(rep.verdict);
  json params = json::object();
  for (const auto& [k, v] : rep.parameters) params[k] = v;
  rec["parameters"] = params;
  json cov = json::object();
  for (const auto& [k, v] : rep.coverage) cov[k] = v;
  rec["coverage"] = cov;
  json cex = json::array();
  for (const auto& c : rep.counterexamples) {
    json e;
    e["a"] = c.a;
    e["b"] = c.b;
    e["observed"] = c.observed;
    e["detail"] = c.detail;
    cex.push_back(e);
  }
  rec["counterexamples"] = cex;
  return rec;
}

// "1,2,3", "1..10" or a mix ("1..4,10").
std::vector<u64> parse_ns(const std::string& spec) {
  std::vector<u64> ns;
  std::stringstream ss(spec);
  std::string token;
  while (std::getline(ss, token, ',')) {
    auto dots = token.find("..");
    if (dots == std::string::npos) {
      ns.push_back(std::stoull(token));
    } else {
      u64 lo = std::stoull(token.substr(0, dots));
      u64 hi = std::stoull(token.substr(dots + 2));
      for (u64 n = lo; n <= hi; ++n) ns.push_back(n);
    }
  }
  if (ns.empty()) throw CLI::ValidationError("--ns", "empty list");
  return ns;
}

// Returns the number of entries clamped to 255 (PGM only).
u64 write_heatmap(const std::vector<std::vector<u64>>& grid, std::ostream& out,
                  const std::string& fmt) {
  u64 clamped = 0;
  if (fmt == "csv") {
    for (const auto& row : grid) {
      for (size_t i = 0; i < row.size(); ++i) {
        if (i) out << ',';
        out << row[i];
      }
      out << '\n';
    }
    return 0;
  }
  // PGM (plain P2), values clamped at 255.
  u64 maxval = 1;
  for (const auto& row : grid)
    for (u64 v : row) {
      if (v > 255) ++clamped;
      maxval = std::max(maxval, std::min<u64>(v, 255));
    }
  out << "P2\n";
  if (clamped > 0) out << "# " << clamped << " entries clamped at 255\n";
  out << grid.size() << " " << grid.size() << "\n" << maxval << "\n";
  for (const auto& row : grid) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out << ' ';
      out << std::min<u64>(row[i], 255);
    }
    out << '\n';
  }
  return clamped;
}

int run(int argc, char** argv) {
  CLI::App app{"gcd-based map toolkit: f(a,b) = gcd(ab, a+b)/gcd(a,b)"};
  app.require_subcommand(1);

  // eval
  u64 eval_a = 0, eval_b = 0;
  unsigned eval_r = 1;
  auto* cmd_eval = app.add_subcommand("eval", "evaluate f_r(a, b)");
  cmd_eval->add_option("--a", eval_a)->required();
  cmd_eval->add_option("--b", eval_b)->required();
  cmd_eval->add_option("--r", eval_r);

  // solve
  u64 solve_n = 0, solve_bound = 0;
  std::string solve_format = "json";
  auto* cmd_solve = app.add_subcommand("solve", "enumerate all (a,b) <= bound with f(a,b) = n");
  cmd_solve->add_option("--n", solve_n)->required();
  cmd_solve->add_option("--bound", solve_bound)->required();
  cmd_solve->add_option("--format", solve_format)->check(CLI::IsMember({"json", "csv"}));

  // family
  u64 family_n = 0, family_mask = 0, family_bound = 0;
  auto* cmd_family = app.add_subcommand("family", "CRT arithmetic-progression family for squarefree n");
  cmd_family->add_option("--n", family_n)->required();
  cmd_family->add_option("--directions", family_mask, "bitmask, bit i swaps (s,t) for the i-th prime");
  cmd_family->add_option("--bound", family_bound, "also list members within the bound");

  // density
  u64 den_n = 0, den_samples = 1000000, den_seed = 0;
  unsigned den_r = 1, den_threads = 0;
  std::string den_method = "fast";
  auto* cmd_density = app.add_subcommand("density", "density of ones in the f_r grid");
  cmd_density->add_option("--n", den_n)->required();
  cmd_density->add_option("--r", den_r);
  cmd_density->add_option("--method", den_method)->check(CLI::IsMember({"naive", "fast", "sample"}));
  cmd_density->add_option("--samples", den_samples);
  cmd_density->add_option("--seed", den_seed);
  cmd_density->add_option("--threads", den_threads);

  // sweep
  std::string sweep_ns, sweep_format = "json", sweep_method = "fast";
  unsigned sweep_r = 1;
  auto* cmd_sweep = app.add_subcommand("sweep", "density table over several n");
  cmd_sweep->add_option("--ns", sweep_ns, "comma list and/or a..b ranges")->required();
  cmd_sweep->add_option("--r", sweep_r);
  cmd_sweep->add_option("--method", sweep_method)->check(CLI::IsMember({"naive", "fast"}));
  cmd_sweep->add_option("--format", sweep_format)->check(CLI::IsMember({"json", "csv"}));

  // heatmap
  u64 heat_n = 0;
  unsigned heat_r = 1;
  std::string heat_out, heat_fmt = "csv";
  auto* cmd_heatmap = app.add_subcommand("heatmap", "emit the f_r grid as CSV or plain PGM");
  cmd_heatmap->add_option("--n", heat_n)->required();
  cmd_heatmap->add_option("--r", heat_r);
  cmd_heatmap->add_option("--out", heat_out, "output path (stdout when omitted)");
  cmd_heatmap->add_option("--fmt", heat_fmt)->check(CLI::IsMember({"pgm", "csv"}));

  // constants
  std::string const_which;
  u64 const_limit = 10000000;
  auto* cmd_constants = app.add_subcommand("constants", "truncated Euler products with tail bounds");
  cmd_constants->add_option("--which", const_which)->required()->check(CLI::IsMember({"quad-class", "basel"}));
  cmd_constants->add_option("--prime-limit", const_limit);

  // meanvalue
  u64 mean_N = 0;
  auto* cmd_meanvalue = app.add_subcommand("meanvalue", "(1/N) sum phi(n) sigma(n)/n^2");
  cmd_meanvalue->add_option("--N", mean_N)->required();

  // totsum
  u64 tot_x = 0;
  std::string tot_method = "sieve";
  auto* cmd_totsum = app.add_subcommand("totsum", "sum of phi up to x");
  cmd_totsum->add_option("--x", tot_x)->required();
  cmd_totsum->add_option("--method", tot_method)->check(CLI::IsMember({"sieve", "hyperbola"}));

  // cyclo
  u64 cyclo_n = 0, cyclo_verify_r = 0, cyclo_bound = 12;
  auto* cmd_cyclo = app.add_subcommand("cyclo", "cyclotomic polynomials and the a^r + b^r factorization");
  cmd_cyclo->add_option("--n", cyclo_n, "print Phi_n");
  cmd_cyclo->add_option("--verify-r", cyclo_verify_r, "check a^r + b^r factorization up to --bound");
  cmd_cyclo->add_option("--bound", cyclo_bound);

  // verify
  std::string verify_claim;
  u64 verify_n = 0, verify_bound = 0;
  unsigned verify_r = 0;
  bool verify_strict = false;
  auto* cmd_verify = app.add_subcommand("verify", "per-theorem claim reports");
  cmd_verify->add_option("--claim", verify_claim)
      ->required()
      ->check(CLI::IsMember({"thm2.1", "thm2.3", "fr-density", "eq16", "power-identity"}));
  cmd_verify->add_option("--n", verify_n);
  cmd_verify->add_option("--bound", verify_bound);
  cmd_verify->add_option("--r", verify_r);
  cmd_verify->add_flag("--strict", verify_strict, "exit 3 when the checked claim fails");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (cmd_eval->parsed()) {
    json rec;
    rec["a"] = eval_a;
    rec["b"] = eval_b;
    rec["r"] = eval_r;
    rec["value"] = big_to_json(f_r_eval(Pair(eval_a, eval_b), eval_r));
    emit(rec);
  } else if (cmd_solve->parsed()) {
    PairSet sols = enumerate_solutions(solve_n, solve_bound);
    if (solve_format == "csv") {
      std::cout << "a,b\n";
      for (const auto& [a, b] : sols) std::cout << a << ',' << b << '\n';
    } else {
      for (const auto& [a, b] : sols) {
        json rec;
        rec["n"] = solve_n;
        rec["a"] = a;
        rec["b"] = b;
        emit(rec);
      }
    }
  } else if (cmd_family->parsed()) {
    auto factors = factorize(family_n);
    std::vector<bool> dirs(factors.size());
    for (size_t i = 0; i < factors.size(); ++i) dirs[i] = (family_mask >> i) & 1;
    CrtFamily fam = crt_family(family_n, dirs);
    json rec;
    rec["n"] = fam.n;
    rec["primes"] = fam.primes;
    rec["directions"] = family_mask;
    rec["modulus"] = fam.modulus;
    rec["a0"] = fam.a0;
    rec["b0"] = fam.b0;
    emit(rec);
    if (family_bound > 0)
      for (const auto& [a, b] : family_members(fam, family_bound)) {
        json m;
        m["a"] = a;
        m["b"] = b;
        emit(m);
      }
  } else if (cmd_density->parsed()) {
    DensityReport rep;
    if (den_method == "naive") rep = rho_exact_naive(den_n, den_r);
    else if (den_method == "fast") rep = rho_exact_fast(den_n, den_r, den_threads);
    else rep = rho_sampled(den_n, den_r, den_samples, den_seed);
    emit(density_record(rep));
  } else if (cmd_sweep->parsed()) {
    std::vector<u64> ns = parse_ns(sweep_ns);
    DensityMethod m = sweep_method == "naive" ? DensityMethod::naive : DensityMethod::fast;
    std::vector<DensityReport> reps = rho_sweep(ns, sweep_r, m);
    if (sweep_format == "csv") {
      std::cout << "n,rho\n";
      for (const auto& rep : reps) std::cout << rep.n << ',' << rep.rho_decimal() << '\n';
    } else {
      for (const auto& rep : reps) emit(density_record(rep));
    }
  } else if (cmd_heatmap->parsed()) {
    auto grid = heatmap_grid(heat_n, heat_r);
    if (heat_out.empty()) {
      write_heatmap(grid, std::cout, heat_fmt);
    } else {
      std::ofstream out(heat_out);
      if (!out) throw std::runtime_error("heatmap: cannot open " + heat_out);
      u64 clamped = write_heatmap(grid, out, heat_fmt);
      if (!out.good()) throw std::runtime_error("heatmap: write failed for " + heat_out);
      json rec;
      rec["n"] = heat_n;
      rec["r"] = heat_r;
      rec["fmt"] = heat_fmt;
      rec["path"] = heat_out;
      rec["clamped"] = clamped;
      emit(rec);
    }
  } else if (cmd_constants->parsed()) {
    EulerProductResult res = const_which == "basel" ? basel_constant(const_limit)
                                                    : quad_class_constant(const_limit);
    json rec;
    rec["constant"] = const_which;
    rec["prime_limit"] = res.prime_limit;
    rec["value"] = res.value.str(15, std::ios_base::fixed);
    rec["tail_bound"] = res.tail_bound.str(3, std::ios_base::scientific);
    if (res.exact_value) {
      rec["exact_num"] = big_to_json(boost::multiprecision::numerator(*res.exact_value));
      rec["exact_den"] = big_to_json(boost::multiprecision::denominator(*res.exact_value));
    }
    emit(rec);
  } else if (cmd_meanvalue->parsed()) {
    json rec;
    rec["N"] = mean_N;
    rec["value"] = mean_value_sum(mean_N).str(15, std::ios_base::fixed);
    emit(rec);
  } else if (cmd_totsum->parsed()) {
    SummatoryMethod m = tot_method == "hyperbola" ? SummatoryMethod::hyperbola
                                                  : SummatoryMethod::sieve;
    json rec;
    rec["x"] = tot_x;
    rec["method"] = tot_method;
    rec["value"] = i128_to_json(totient_summatory(tot_x, m));
    emit(rec);
  } else if (cmd_cyclo->parsed()) {
    if (cyclo_verify_r > 0) {
      ClaimReport rep = check_power_identity(cyclo_verify_r, cyclo_bound);
      emit(claim_record(rep));
    } else if (cyclo_n > 0) {
      IntPolynomial phi = cyclotomic_poly(cyclo_n);
      json rec;
      rec["n"] = cyclo_n;
      rec["degree"] = phi.degree();
      json coeffs = json::array();
      for (const BigInt& c : phi.coeffs()) coeffs.push_back(big_to_json(c));
      rec["coeffs"] = coeffs;
      rec["pretty"] = phi.str();
      emit(rec);
    } else {
      std::cerr << "cyclo: pass --n or --verify-r\n";
      return 1;
    }
  } else if (cmd_verify->parsed()) {
    ClaimReport rep;
    if (verify_claim == "thm2.1") {
      rep = check_thm_2_1(verify_n ? verify_n : 6, verify_bound ? verify_bound : 600);
    } else if (verify_claim == "thm2.3") {
      rep = check_thm_2_3(verify_n ? verify_n : 6, verify_bound ? verify_bound : 500);
    } else if (verify_claim == "fr-density") {
      rep = check_fr_density(verify_n ? verify_n : 1000, verify_r ? verify_r : 2);
    } else if (verify_claim == "eq16") {
      rep = check_eq_16(verify_n ? verify_n : 100);
    } else {
      rep = check_power_identity(verify_r ? verify_r : 30, verify_bound ? verify_bound : 12);
    }
    emit(claim_record(rep));
    if (verify_strict && rep.verdict == Verdict::fails) return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
