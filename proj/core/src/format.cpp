#include "gcdmap/format.hpp"

#include <stdexcept>

namespace gcdmap {

std::string format_fixed(u64 num, u64 den, int places) {
  if (den == 0) throw std::invalid_argument("format_fixed: zero denominator");
  BigInt scale = 1;
  for (int i = 0; i < places; ++i) scale *= 10;
  BigInt n = BigInt(num) * scale;
  BigInt q = n / den;
  BigInt r = n % den;
  BigInt twice = r * 2;
  if (twice > den || (twice == den && (q & 1) == 1)) ++q;

  BigInt whole = q / scale;
  BigInt frac = q % scale;
  std::string out = whole.str();
  if (places > 0) {
    std::string f = frac.str();
    out += '.';
    out += std::string(static_cast<size_t>(places) - f.size(), '0');
    out += f;
  }
  return out;
}

std::string to_string(u128 value) {
  if (value == 0) return "0";
  std::string s;
  while (value != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return std::string(s.rbegin(), s.rend());
}

std::string to_string(i128 value) {
  if (value < 0) return "-" + to_string(static_cast<u128>(-value));
  return to_string(static_cast<u128>(value));
}

}  // namespace gcdmap
