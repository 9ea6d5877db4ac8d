#pragma once

// Exact binomial coefficients as big integers, reduced mod p afterwards.

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

inline boost::multiprecision::cpp_int binomial(unsigned a, unsigned b) {
  if (b > a) return 0;
  boost::multiprecision::cpp_int r = 1;
  for (unsigned i = 1; i <= b; ++i) {
    r *= a - b + i;
    r /= i;
  }
  return r;
}

inline std::uint32_t binomial_mod(unsigned a, unsigned b, std::uint32_t p) {
  return static_cast<std::uint32_t>(binomial(a, b) % p);
}

}  // namespace oracle
