#include "motivic/gflin.hpp"

#include <algorithm>
#include <string>

namespace motivic {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 31) || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) + " is not a supported prime");
}

Scalar PrimeField::pow(Scalar a, std::uint64_t e) const noexcept {
  Scalar result = 1 % p_;
  Scalar base = a;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Scalar PrimeField::inv(Scalar a) const {
  if (a % p_ == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p_ - 2);
}

FpVector FpVector::from_entries(const PrimeField& field, std::size_t dim,
                                std::vector<std::pair<std::size_t, std::int64_t>> entries) {
  std::sort(entries.begin(), entries.end());
  FpVector v(dim);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto [index, value] = entries[i];
    if (index >= dim) throw std::invalid_argument("FpVector index out of range");
    if (i > 0 && entries[i - 1].first == index)
      throw std::invalid_argument("FpVector duplicate index");
    Scalar s = field.normalize(value);
    if (s != 0) v.entries_.push_back({index, s});
  }
  return v;
}

FpVector FpVector::from_dense(const PrimeField& field, std::span<const std::int64_t> values) {
  FpVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    Scalar s = field.normalize(values[i]);
    if (s != 0) v.entries_.push_back({i, s});
  }
  return v;
}

FpVector FpVector::from_canonical(std::span<const Scalar> values) {
  FpVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) v.entries_.push_back({i, values[i]});
  return v;
}

Scalar FpVector::at(std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->value : 0;
}

std::vector<Scalar> FpVector::to_dense() const {
  std::vector<Scalar> out(dim_, 0);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

void EchelonSpan::check_dim(std::size_t d) const {
  if (d != dim_)
    throw std::invalid_argument("dimension mismatch: span has " + std::to_string(dim_) +
                                ", vector has " + std::to_string(d));
}

void EchelonSpan::reduce_in_place(std::span<Scalar> buf) const {
  check_dim(buf.size());
  const std::uint64_t p = field_.modulus();
  // Rows vanish on each other's pivots, so one pass in any order suffices.
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar c = buf[pivots_[r]];
    if (c == 0) continue;
    const std::uint64_t f = p - c;
    for (const auto& e : rows_[r].entries())
      buf[e.index] = static_cast<Scalar>((buf[e.index] + f * e.value) % p);
  }
}

FpVector EchelonSpan::reduce(const FpVector& v) const {
  check_dim(v.dim());
  auto buf = v.to_dense();
  reduce_in_place(buf);
  return FpVector::from_canonical(buf);
}

bool EchelonSpan::insert(const FpVector& v) {
  check_dim(v.dim());
  auto buf = v.to_dense();
  return insert_dense(buf);
}

bool EchelonSpan::insert_dense(std::span<Scalar> buf) {
  reduce_in_place(buf);
  return insert_reduced(buf);
}

bool EchelonSpan::insert_reduced(std::span<Scalar> buf) {
  auto lead = std::find_if(buf.begin(), buf.end(), [](Scalar s) { return s != 0; });
  if (lead == buf.end()) return false;
  const std::size_t pivot = static_cast<std::size_t>(lead - buf.begin());
  const Scalar scale = field_.inv(*lead);
  for (std::size_t i = pivot; i < buf.size(); ++i)
    if (buf[i]) buf[i] = field_.mul(buf[i], scale);
  FpVector row = FpVector::from_canonical(buf);

  // Clear the new pivot column from the existing rows.
  for (auto& existing : rows_) {
    const Scalar c = existing.at(pivot);
    if (c == 0) continue;
    std::vector<Scalar> dense = existing.to_dense();
    const Scalar f = field_.neg(c);
    for (const auto& e : row.entries())
      dense[e.index] = field_.add(dense[e.index], field_.mul(f, e.value));
    existing = FpVector::from_canonical(dense);
  }

  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
  const auto offset = pos - pivots_.begin();
  pivots_.insert(pos, pivot);
  rows_.insert(rows_.begin() + offset, std::move(row));
  return true;
}

}  // namespace motivic
