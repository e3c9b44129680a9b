#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace catg {

// Exact arbitrary-precision natural number. Group orders reach 80!/2
// (~10^118), far beyond machine words, and every order comparison in the
// toolkit must be exact.
using BigCount = boost::multiprecision::cpp_int;

inline std::string to_string(const BigCount& n) { return n.str(); }

inline BigCount factorial(unsigned n) {
  BigCount r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

// Quotient of an exact division; throws if the division leaves a remainder.
BigCount divide_exact(const BigCount& num, const BigCount& den);

inline bool fits_u64(const BigCount& n) {
  return n <= BigCount(UINT64_MAX);
}

inline std::uint64_t to_u64(const BigCount& n) {
  return static_cast<std::uint64_t>(n);
}

}  // namespace catg
