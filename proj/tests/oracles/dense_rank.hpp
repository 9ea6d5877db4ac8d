#pragma once

// Textbook Gaussian elimination on a dense matrix mod p. Deliberately naive:
// it shares no code with the library's echelon spans.

#include <cstdint>
#include <utility>
#include <vector>

namespace oracle {

inline std::int64_t mod(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

inline std::int64_t inverse_mod(std::int64_t a, std::int64_t p) {
  // Fermat: a^(p-2).
  std::int64_t result = 1, base = mod(a, p);
  for (std::int64_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return result;
}

inline std::size_t dense_rank(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (auto& r : rows)
    for (auto& x : r) x = mod(x, p);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto inv = inverse_mod(rows[rank][c], p);
    for (auto& x : rows[rank]) x = x * inv % p;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const auto f = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] = mod(rows[r][k] - f * rows[rank][k], p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace oracle
