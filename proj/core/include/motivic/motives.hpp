#pragma once

// Poincare polynomials and the decomposition report for X(p^m, D).

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "motivic/binomial.hpp"
#include "motivic/chowprod.hpp"
#include "motivic/subring.hpp"

namespace motivic {

/// Integer polynomial in t, coefficient i = rank in degree i. Trailing zeros trimmed.
class PoincarePoly {
 public:
  PoincarePoly() = default;
  explicit PoincarePoly(std::vector<std::int64_t> coeffs);

  /// c * t^e
  static PoincarePoly monomial(int e, std::int64_t c = 1);
  /// 1 + t + ... + t^(count-1)
  static PoincarePoly geometric(int count);

  const std::vector<std::int64_t>& coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::int64_t operator[](int i) const noexcept {
    return i >= 0 && i <= degree() ? coeffs_[static_cast<std::size_t>(i)] : 0;
  }
  /// Value at t = 1, i.e. the total rank.
  std::int64_t total() const noexcept;
  bool nonnegative() const noexcept;
  /// coeff(i) == coeff(top - i) for 0 <= i <= top.
  bool palindromic(int top) const noexcept;

  PoincarePoly shifted(int e) const;
  std::string to_string() const;

  friend PoincarePoly operator+(const PoincarePoly& a, const PoincarePoly& b);
  friend PoincarePoly operator-(const PoincarePoly& a, const PoincarePoly& b);
  friend PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b);
  friend PoincarePoly operator*(std::int64_t c, const PoincarePoly& a);
  friend bool operator==(const PoincarePoly&, const PoincarePoly&) = default;

 private:
  void trim();
  std::vector<std::int64_t> coeffs_;
};

/// Thrown by divide_exact when the division leaves a remainder.
class DivisionRemainder : public std::runtime_error {
 public:
  DivisionRemainder(PoincarePoly quotient, PoincarePoly remainder);
  const PoincarePoly& quotient() const noexcept { return quotient_; }
  const PoincarePoly& remainder() const noexcept { return remainder_; }

 private:
  PoincarePoly quotient_;
  PoincarePoly remainder_;
};

/// Exact quotient num / den; throws std::invalid_argument on den = 0 and
/// DivisionRemainder when den does not divide num.
PoincarePoly divide_exact(const PoincarePoly& num, const PoincarePoly& den);

/// Gaussian binomial [n choose k]_t, the Poincare polynomial of G(k, n).
PoincarePoly poincare_grassmannian(int k, int n);

/// All k >= 0 such that q - sum_o t^(k+o) still has nonnegative coefficients.
std::vector<int> shift_candidates(const PoincarePoly& q, std::span<const int> offsets);

/// Binomial congruences used to certify decomposability:
/// C(r, 2) = 0, C(r, p^m - 1) = 0 and C(r - 1, p^m - 2) = (-1)^(p^m - 2), all mod p.
struct CorollaryConditions {
  bool r_choose_2_vanishes = false;
  bool r_choose_km1_vanishes = false;
  bool sign_condition = false;
  bool all() const noexcept { return r_choose_2_vanishes && r_choose_km1_vanishes && sign_condition; }
};
/// Throws std::invalid_argument for m = 0.
CorollaryConditions corollary_conditions(const GeometrySpec& spec);
/// p = 2 with 1 < m < n, or p > 2 with 0 < m < n.
bool decomposability_hypotheses(const GeometrySpec& spec) noexcept;

struct Diagnostics {
  bool residual_nonnegative = false;
  bool residual_palindromic = false;
  bool residual_unit_ends = false;
  bool duality_consistent = false;
};

struct DecompositionReport {
  GeometrySpec spec;
  /// a_0..a_D: copies of M(X(1, D))(k) in M(X(p^m, D)).
  std::vector<std::int64_t> multiplicities;
  /// P(M(Y)) minus the Poincare polynomials of all shifted copies.
  PoincarePoly residual;
  /// Multiplicities for 0 <= k <= computed_kmax came from V_k, the rest by duality.
  int computed_kmax = 0;
  Diagnostics diagnostics;
};

struct DecomposeOptions {
  /// Defaults to ceil(D / 2); must lie in [ceil(D / 2), D].
  std::optional<int> k_max;
  SubringOptions subring;
};

DecompositionReport decompose(const GeometrySpec& spec, const DecomposeOptions& options = {});

}  // namespace motivic
