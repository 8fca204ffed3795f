#include "gcdmap/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "gcdmap/core_arith.hpp"

namespace gcdmap {

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(u64 n) {
  std::vector<BigInt> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  return IntPolynomial(std::move(c));
}

const BigInt& IntPolynomial::coeff(size_t i) const {
  static const BigInt zero = 0;
  return i < coeffs_.size() ? coeffs_[i] : zero;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero()) return IntPolynomial();
  std::vector<BigInt> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial IntPolynomial::divide_exact(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("divide_exact: division by zero polynomial");
  if (is_zero()) return IntPolynomial();
  if (degree() < divisor.degree())
    throw std::domain_error("divide_exact: inexact division (degree)");
  std::vector<BigInt> rem = coeffs_;
  const auto& d = divisor.coeffs_;
  const BigInt& lead = d.back();
  std::vector<BigInt> quot(rem.size() - d.size() + 1);
  for (size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + d.size() - 1];
    if (top == 0) continue;
    if (top % lead != 0) throw std::domain_error("divide_exact: inexact division");
    BigInt q = top / lead;
    quot[i] = q;
    for (size_t j = 0; j < d.size(); ++j) rem[i + j] -= q * d[j];
  }
  for (const BigInt& c : rem)
    if (c != 0) throw std::domain_error("divide_exact: nonzero remainder");
  return IntPolynomial(std::move(quot));
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!first) out << (coeffs_[i] > 0 ? " + " : " - ");
    else if (coeffs_[i] < 0) out << "-";
    BigInt mag = boost::multiprecision::abs(coeffs_[i]);
    if (mag != 1 || i == 0) out << mag.str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial cyclotomic_poly(u64 n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly: n must be >= 1");
  static std::map<u64, IntPolynomial> memo;
  static std::mutex memo_mutex;
  {
    std::lock_guard lock(memo_mutex);
    auto it = memo.find(n);
    if (it != memo.end()) return it->second;
  }
  IntPolynomial result = IntPolynomial::x_pow_minus_one(n);
  for (u64 d = 1; d < n; ++d)
    if (n % d == 0) result = result.divide_exact(cyclotomic_poly(d));
  std::lock_guard lock(memo_mutex);
  return memo.emplace(n, std::move(result)).first->second;
}

BigInt homogenize_eval(const IntPolynomial& poly, const BigInt& a, const BigInt& b) {
  if (poly.is_zero()) return 0;
  // Horner in a, tracking the matching power of b.
  const auto& c = poly.coeffs();
  BigInt acc = c.back();
  for (size_t i = c.size() - 1; i-- > 0;) acc = acc * a + c[i] * boost::multiprecision::pow(b, static_cast<unsigned>(c.size() - 1 - i));
  return acc;
}

std::vector<u64> factor_indices(u64 r) {
  if (r == 0) throw std::invalid_argument("factor_indices: r must be >= 1");
  std::vector<u64> out;
  for (u64 d = 1; d <= 2 * r; ++d)
    if ((2 * r) % d == 0 && r % d != 0) out.push_back(d);
  return out;
}

bool verify_power_identity(u64 r, u64 a, u64 b, BigInt* lhs_out, BigInt* rhs_out) {
  BigInt lhs = boost::multiprecision::pow(BigInt(a), static_cast<unsigned>(r)) +
               boost::multiprecision::pow(BigInt(b), static_cast<unsigned>(r));
  BigInt rhs = 1;
  for (u64 d : factor_indices(r))
    rhs *= homogenize_eval(cyclotomic_poly(d), BigInt(a), BigInt(b));
  if (lhs_out) *lhs_out = lhs;
  if (rhs_out) *rhs_out = rhs;
  return lhs == rhs;
}

namespace {

// True if every prime dividing x also divides y.
bool prime_support_subset(BigInt x, const BigInt& y) {
  for (;;) {
    BigInt g = boost::multiprecision::gcd(x, y);
    if (g == 1) break;
    while (x % g == 0) x /= g;
  }
  return x == 1;
}

constexpr size_t kMaxRecorded = 8;

}  // namespace

GcdPowerScanReport gcd_power_scan(u64 bound, unsigned r) {
  if (r < 2) throw std::invalid_argument("gcd_power_scan: r must be >= 2");
  if (bound == 0) throw std::invalid_argument("gcd_power_scan: bound must be >= 1");
  GcdPowerScanReport rep;
  rep.bound = bound;
  rep.r = r;
  for (u64 a = 1; a <= bound; ++a) {
    BigInt ar = boost::multiprecision::pow(BigInt(a), r);
    for (u64 b = 1; b <= bound; ++b) {
      BigInt powsum = ar + boost::multiprecision::pow(BigInt(b), r);
      BigInt big_gcd = boost::multiprecision::gcd(powsum, BigInt(a) * b);
      u64 small_gcd = gcd_nonneg(a, b);
      BigInt fr = big_gcd / small_gcd;

      bool support_ok = prime_support_subset(big_gcd, small_gcd) &&
                        prime_support_subset(small_gcd, big_gcd);
      if (!support_ok) {
        rep.prime_support_holds = false;
        if (rep.prime_support_counterexamples.size() < kMaxRecorded)
          rep.prime_support_counterexamples.push_back(
              {a, b, "gcd(a^r+b^r,ab)=" + big_gcd.str()});
      }
      if (big_gcd != small_gcd) {
        rep.literal_holds = false;
        ++rep.literal_failures;
        if (rep.literal_counterexamples.size() < kMaxRecorded)
          rep.literal_counterexamples.push_back(
              {a, b,
               "gcd(a^r+b^r,ab)=" + big_gcd.str() +
                   " gcd(a,b)=" + std::to_string(small_gcd)});
      }
      if ((fr == 1) != (small_gcd == 1)) {
        rep.unit_iff_coprime_holds = false;
        if (rep.unit_iff_coprime_counterexamples.size() < kMaxRecorded)
          rep.unit_iff_coprime_counterexamples.push_back({a, b, "f_r=" + fr.str()});
      }
    }
  }
  return rep;
}

}  // namespace gcdmap
