#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrsq {

/// Exact integer used for every count the library returns.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt ipow(const BigInt& base, unsigned exp) {
  BigInt r = 1, b = base;
  while (exp) {
    if (exp & 1u) r *= b;
    b *= b;
    exp >>= 1u;
  }
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

inline BigInt from_decimal(const std::string& s) { return BigInt(s); }

}  // namespace lrsq
