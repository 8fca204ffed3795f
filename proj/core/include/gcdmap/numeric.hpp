#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace gcdmap {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;
using i128 = __int128;

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// 50 decimal digits (~166 bits of mantissa). Euler products over primes up
// to 1e7 and the mean-value sums accumulate here when exact rationals get
// too heavy.
using BigFloat = boost::multiprecision::cpp_bin_float_50;

}  // namespace gcdmap
