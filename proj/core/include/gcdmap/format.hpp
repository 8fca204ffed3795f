#pragma once

#include <string>

#include "gcdmap/numeric.hpp"

namespace gcdmap {

// num/den as a fixed-point decimal with `places` digits after the point,
// rounded half-to-even. Exact integer arithmetic; output is stable across
// platforms and runs.
std::string format_fixed(u64 num, u64 den, int places);

std::string to_string(i128 value);
std::string to_string(u128 value);

}  // namespace gcdmap
