#pragma once

// Exact linear algebra over a prime field F_p.

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace motivic {

using Scalar = std::uint32_t;

bool is_prime(std::uint64_t n) noexcept;

/// The prime field F_p. Every Scalar handed out is canonical, i.e. in [0, p).
class PrimeField {
 public:
  /// Throws std::invalid_argument unless p is a prime below 2^31.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  Scalar normalize(std::int64_t x) const noexcept {
    auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<Scalar>(r < 0 ? r + p_ : r);
  }
  Scalar add(Scalar a, Scalar b) const noexcept {
    Scalar s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Scalar sub(Scalar a, Scalar b) const noexcept { return a >= b ? a - b : a + p_ - b; }
  Scalar neg(Scalar a) const noexcept { return a == 0 ? 0 : p_ - a; }
  Scalar mul(Scalar a, Scalar b) const noexcept {
    return static_cast<Scalar>(static_cast<std::uint64_t>(a) * b % p_);
  }
  Scalar pow(Scalar a, std::uint64_t e) const noexcept;
  /// Multiplicative inverse; throws std::domain_error on zero.
  Scalar inv(Scalar a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint32_t p_;
};

/// Sparse vector with strictly increasing indices and no zero entries.
class FpVector {
 public:
  struct Entry {
    std::size_t index;
    Scalar value;
    friend bool operator==(const Entry&, const Entry&) = default;
  };

  FpVector() = default;
  explicit FpVector(std::size_t dim) : dim_(dim) {}

  /// Entries may come in any order; values are reduced mod p and zeros dropped.
  /// Duplicate or out-of-range indices throw std::invalid_argument.
  static FpVector from_entries(const PrimeField& field, std::size_t dim,
                               std::vector<std::pair<std::size_t, std::int64_t>> entries);
  static FpVector from_dense(const PrimeField& field, std::span<const std::int64_t> values);
  /// Takes canonical scalars, e.g. a working buffer after elimination.
  static FpVector from_canonical(std::span<const Scalar> values);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t nnz() const noexcept { return entries_.size(); }
  bool is_zero() const noexcept { return entries_.empty(); }
  const std::vector<Entry>& entries() const noexcept { return entries_; }

  Scalar at(std::size_t index) const;
  std::vector<Scalar> to_dense() const;

  friend bool operator==(const FpVector&, const FpVector&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Incrementally maintained reduced row-echelon basis of a subspace of F_p^dim.
///
/// Rows are kept sorted by pivot. The pivot of a row is its lowest nonzero
/// index, its leading coefficient is 1, and every pivot column vanishes in
/// all other rows. A single writer may insert; concurrent readers may call
/// the const members on a span that is no longer being modified.
class EchelonSpan {
 public:
  EchelonSpan(PrimeField field, std::size_t dim) : field_(field), dim_(dim) {}

  const PrimeField& field() const noexcept { return field_; }
  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return rows_.size(); }
  const std::vector<FpVector>& rows() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  /// Residual of v after elimination against every pivot; zero iff v is in the span.
  FpVector reduce(const FpVector& v) const;
  bool contains(const FpVector& v) const { return reduce(v).is_zero(); }

  /// Returns true iff the rank grew.
  bool insert(const FpVector& v);

  /// Dense fast path: `buf` holds canonical scalars and has length dim().
  void reduce_in_place(std::span<Scalar> buf) const;
  bool insert_dense(std::span<Scalar> buf);

 private:
  void check_dim(std::size_t d) const;
  bool insert_reduced(std::span<Scalar> buf);

  PrimeField field_;
  std::size_t dim_;
  std::vector<FpVector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace motivic
