#pragma once

#include <cstdint>

#include "motivic/gflin.hpp"

namespace motivic {

/// C(a, b) mod p by the Lucas rule (product of binomials of base-p digits).
/// Zero when b > a.
Scalar lucas_binom(std::uint64_t a, std::uint64_t b, std::uint32_t p);

/// p-adic valuation of a positive integer; throws std::invalid_argument on 0.
int vp(std::uint64_t l, std::uint32_t p);

/// p^e, throwing std::overflow_error past 2^62.
std::uint64_t checked_power(std::uint64_t p, int e);

}  // namespace motivic
