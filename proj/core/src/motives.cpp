#include "motivic/motives.hpp"

#include <algorithm>

namespace motivic {

PoincarePoly::PoincarePoly(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void PoincarePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

PoincarePoly PoincarePoly::monomial(int e, std::int64_t c) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  std::vector<std::int64_t> v(static_cast<std::size_t>(e) + 1, 0);
  v.back() = c;
  return PoincarePoly(std::move(v));
}

PoincarePoly PoincarePoly::geometric(int count) {
  return PoincarePoly(std::vector<std::int64_t>(static_cast<std::size_t>(std::max(count, 0)), 1));
}

std::int64_t PoincarePoly::total() const noexcept {
  std::int64_t s = 0;
  for (auto c : coeffs_) s += c;
  return s;
}

bool PoincarePoly::nonnegative() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::int64_t c) { return c >= 0; });
}

bool PoincarePoly::palindromic(int top) const noexcept {
  if (degree() > top) return false;
  for (int i = 0; i <= top; ++i)
    if ((*this)[i] != (*this)[top - i]) return false;
  return true;
}

PoincarePoly PoincarePoly::shifted(int e) const {
  if (is_zero()) return {};
  if (e < 0) throw std::invalid_argument("negative shift");
  std::vector<std::int64_t> v(static_cast<std::size_t>(e), 0);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return PoincarePoly(std::move(v));
}

std::string PoincarePoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= degree(); ++i) {
    const auto c = (*this)[i];
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    const auto mag = c < 0 ? -c : c;
    if (i == 0) {
      out += std::to_string(mag);
      continue;
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += i == 1 ? "t" : "t^" + std::to_string(i);
  }
  return out;
}

PoincarePoly operator+(const PoincarePoly& a, const PoincarePoly& b) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(std::max(a.degree(), b.degree()) + 1), 0);
  for (int i = 0; i <= a.degree(); ++i) v[static_cast<std::size_t>(i)] += a[i];
  for (int i = 0; i <= b.degree(); ++i) v[static_cast<std::size_t>(i)] += b[i];
  return PoincarePoly(std::move(v));
}

PoincarePoly operator-(const PoincarePoly& a, const PoincarePoly& b) { return a + (-1) * b; }

PoincarePoly operator*(std::int64_t c, const PoincarePoly& a) {
  auto v = a.coeffs();
  for (auto& x : v) x *= c;
  return PoincarePoly(std::move(v));
}

PoincarePoly operator*(const PoincarePoly& a, const PoincarePoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> v(static_cast<std::size_t>(a.degree() + b.degree() + 1), 0);
  for (int i = 0; i <= a.degree(); ++i)
    for (int j = 0; j <= b.degree(); ++j) v[static_cast<std::size_t>(i + j)] += a[i] * b[j];
  return PoincarePoly(std::move(v));
}

DivisionRemainder::DivisionRemainder(PoincarePoly quotient, PoincarePoly remainder)
    : std::runtime_error("polynomial division leaves remainder " + remainder.to_string()),
      quotient_(std::move(quotient)),
      remainder_(std::move(remainder)) {}

PoincarePoly divide_exact(const PoincarePoly& num, const PoincarePoly& den) {
  if (den.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::vector<std::int64_t> rem = num.coeffs();
  const int dd = den.degree();
  const auto lead = den[dd];
  std::vector<std::int64_t> quot(static_cast<std::size_t>(std::max(num.degree() - dd + 1, 0)), 0);
  for (int i = num.degree(); i >= dd; --i) {
    const auto c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (c % lead != 0) break;
    const auto q = c / lead;
    quot[static_cast<std::size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= q * den[j];
  }
  PoincarePoly remainder(std::move(rem));
  if (!remainder.is_zero()) throw DivisionRemainder(PoincarePoly(std::move(quot)), std::move(remainder));
  return PoincarePoly(std::move(quot));
}

PoincarePoly poincare_grassmannian(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("poincare_grassmannian needs 0 <= k <= n");
  // [n-k+j choose j]_t for j = 1..k, each step an exact division.
  PoincarePoly result = PoincarePoly::monomial(0);
  for (int j = 1; j <= k; ++j) {
    result = result * (PoincarePoly::monomial(0) - PoincarePoly::monomial(n - k + j));
    result = divide_exact(result, PoincarePoly::monomial(0) - PoincarePoly::monomial(j));
  }
  return result;
}

std::vector<int> shift_candidates(const PoincarePoly& q, std::span<const int> offsets) {
  if (offsets.empty()) throw std::invalid_argument("shift_candidates needs at least one offset");
  std::vector<int> out;
  for (int k = 0; k <= q.degree(); ++k) {
    PoincarePoly pattern;
    for (int o : offsets) pattern = pattern + PoincarePoly::monomial(k + o);
    if ((q - pattern).nonnegative()) out.push_back(k);
  }
  return out;
}

CorollaryConditions corollary_conditions(const GeometrySpec& spec) {
  if (spec.m == 0) throw std::invalid_argument("the binomial conditions need m >= 1");
  const auto p = static_cast<std::uint32_t>(spec.p);
  const auto r = static_cast<std::uint64_t>(spec.w);
  const auto k = static_cast<std::uint64_t>(spec.k);
  const PrimeField field(p);
  CorollaryConditions out;
  out.r_choose_2_vanishes = lucas_binom(r, 2, p) == 0;
  out.r_choose_km1_vanishes = lucas_binom(r, k - 1, p) == 0;
  // (-1)^(p^m - 2); p^m - 2 = -1 when p^m = 1 cannot happen for m >= 1.
  const Scalar sign = (k - 2) % 2 == 0 ? 1 : field.neg(1);
  out.sign_condition = lucas_binom(r - 1, k - 2, p) == sign;
  return out;
}

bool decomposability_hypotheses(const GeometrySpec& spec) noexcept {
  if (spec.p == 2) return spec.m > 1 && spec.m < spec.n;
  return spec.m > 0 && spec.m < spec.n;
}

DecompositionReport decompose(const GeometrySpec& spec, const DecomposeOptions& options) {
  const int range = spec.shift_range;
  const int half = (range + 1) / 2;
  const int k_max = options.k_max.value_or(half);
  if (k_max < half || k_max > range)
    throw std::invalid_argument("k_max must lie in [" + std::to_string(half) + ", " +
                                std::to_string(range) + "]");

  const auto dims = v_dims(spec, k_max, options.subring);

  DecompositionReport report;
  report.spec = spec;
  report.computed_kmax = k_max;
  report.multiplicities.assign(static_cast<std::size_t>(range) + 1, 0);
  for (int k = 0; k <= range; ++k)
    report.multiplicities[static_cast<std::size_t>(k)] =
        k <= k_max ? dims[static_cast<std::size_t>(k)] : dims[static_cast<std::size_t>(range - k)];

  bool duality = true;
  for (int k = 0; k <= k_max; ++k)
    if (range - k <= k_max && dims[static_cast<std::size_t>(k)] != dims[static_cast<std::size_t>(range - k)])
      duality = false;

  const auto block = PoincarePoly::geometric(spec.d + 1);
  PoincarePoly shifts;
  for (int k = 0; k <= range; ++k)
    shifts = shifts + report.multiplicities[static_cast<std::size_t>(k)] * block.shifted(k);
  report.residual = poincare_grassmannian(spec.k, spec.d + 1) - shifts;

  auto& diag = report.diagnostics;
  diag.residual_nonnegative = report.residual.nonnegative();
  diag.residual_palindromic = report.residual.palindromic(spec.dim_y);
  diag.residual_unit_ends = report.residual[0] == 1 && report.residual[spec.dim_y] == 1;
  diag.duality_consistent = duality;
  return report;
}

}  // namespace motivic
