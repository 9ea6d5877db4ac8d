#include "motivic/binomial.hpp"

#include <stdexcept>

namespace motivic {

namespace {

// Digits are below p, so the small factorial-free product stays exact in 64 bits mod p.
Scalar small_binom(std::uint64_t a, std::uint64_t b, const PrimeField& field) {
  if (b > a) return 0;
  Scalar num = 1, den = 1;
  for (std::uint64_t i = 0; i < b; ++i) {
    num = field.mul(num, static_cast<Scalar>((a - i) % field.modulus()));
    den = field.mul(den, static_cast<Scalar>((i + 1) % field.modulus()));
  }
  return field.mul(num, field.inv(den));
}

}  // namespace

Scalar lucas_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p) {
  const PrimeField field(p);
  if (b > a) return 0;
  Scalar result = 1;
  while (b > 0 || a > 0) {
    const Scalar digit = small_binom(a % p, b % p, field);
    if (digit == 0) return 0;
    result = field.mul(result, digit);
    a /= p;
    b /= p;
  }
  return result;
}

int vp(std::uint64_t l, std::uint32_t p) {
  if (l == 0) throw std::invalid_argument("v_p(0) is undefined");
  if (p < 2) throw std::invalid_argument("v_p needs p >= 2");
  int v = 0;
  while (l % p == 0) {
    l /= p;
    ++v;
  }
  return v;
}

std::uint64_t checked_power(std::uint64_t p, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::uint64_t out = 1;
  for (int i = 0; i < e; ++i) {
    if (out > (std::uint64_t{1} << 62) / p) throw std::overflow_error("power overflows");
    out *= p;
  }
  return out;
}

}  // namespace motivic
