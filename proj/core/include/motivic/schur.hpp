#pragma once

// The Chow ring Ch(G(k, n); F_p) in the Schubert (Schur) basis.

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "motivic/gflin.hpp"
#include "motivic/partition.hpp"

namespace motivic {

/// A homogeneous element sum c_lambda * sigma_lambda. Terms iterate in
/// descending lexicographic order of the partitions.
class GrassClass {
 public:
  using Terms = std::map<Partition, Scalar, std::greater<>>;

  explicit GrassClass(int degree = 0) : degree_(degree) {}

  int degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Partition& lambda) const;

  /// Adds c * sigma_lambda; throws if |lambda| differs from the degree.
  void add_term(const Partition& lambda, Scalar c, const PrimeField& field);

  friend bool operator==(const GrassClass&, const GrassClass&) = default;

 private:
  int degree_;
  Terms terms_;
};

/// Ch(G(rows, rows + cols); F_p). Owns the partition index of the box and the
/// memoized structure constants; safe to share between threads.
class SchurRing {
 public:
  struct Term {
    int id;
    Scalar coeff;
  };

  SchurRing(PrimeField field, Box box);
  ~SchurRing();
  SchurRing(const SchurRing&) = delete;
  SchurRing& operator=(const SchurRing&) = delete;

  const PrimeField& field() const noexcept { return field_; }
  const Box& box() const noexcept { return box_; }
  int top_degree() const noexcept { return box_.area(); }

  // Partition index: ids run over the box ordered by size, then lexicographically.
  std::size_t partition_count() const noexcept { return partitions_.size(); }
  const Partition& partition(int id) const { return partitions_.at(static_cast<std::size_t>(id)); }
  /// -1 when lambda does not fit the box.
  int id_of(const Partition& lambda) const;
  /// Number of partitions of size s in the box (the Betti number of G in codimension s).
  int count_of_size(int s) const;
  /// Position of the partition among those of the same size.
  int position_in_size(int id) const { return position_in_size_.at(static_cast<std::size_t>(id)); }
  int first_id_of_size(int s) const;

  /// sigma_lambda * sigma_mu as (id, coefficient) pairs, memoized per mu.
  std::span<const Term> multiply_ids(int lambda_id, int mu_id) const;

  /// Products with a fixed sigma_mu, without the table lookup per call.
  class ProductView {
   public:
    std::span<const Term> operator()(int lambda_id) const;

   private:
    friend class SchurRing;
    ProductView(const SchurRing* ring, const void* table) : ring_(ring), table_(table) {}
    const SchurRing* ring_;
    const void* table_;
  };
  ProductView products_with(int mu_id) const;

  GrassClass unit() const;
  GrassClass sigma(const Partition& lambda) const;
  /// e_i = sigma_(1^i); zero when i exceeds the number of rows.
  GrassClass elementary(int i) const;
  /// h_i = sigma_(i); zero when i exceeds the number of columns.
  GrassClass complete(int i) const;

  GrassClass add(const GrassClass& a, const GrassClass& b) const;
  GrassClass subtract(const GrassClass& a, const GrassClass& b) const;
  GrassClass scale(const GrassClass& a, Scalar c) const;
  /// Littlewood-Richardson product truncated to the box.
  GrassClass multiply(const GrassClass& a, const GrassClass& b) const;
  GrassClass power(const GrassClass& a, int exponent) const;

  /// Throws std::invalid_argument if a term does not fit the box.
  void validate(const GrassClass& x) const;

  /// "2*sigma[7] + sigma[6,1]"; the zero class prints as "0".
  std::string to_string(const GrassClass& x) const;

 private:
  struct ProductTable;
  const ProductTable& table_for(int mu_id) const;
  std::vector<Term> compute_product(int lambda_id, const ProductTable& table) const;

  PrimeField field_;
  Box box_;
  std::vector<Partition> partitions_;
  std::unordered_map<Partition, int> ids_;
  std::vector<int> position_in_size_;
  std::vector<int> size_offsets_;

  mutable std::mutex tables_mutex_;
  mutable std::unordered_map<int, std::unique_ptr<ProductTable>> tables_;
};

/// Jacobi-Trudi expansion of sigma_mu as a signed sum of products of strip
/// generators: h-monomials (Strip::row) when mu has at most mu_1 rows,
/// e-monomials of the conjugate otherwise. Generators beyond the box vanish.
struct StripMonomial {
  std::vector<int> factors;
  std::int64_t coeff;
};
struct JacobiTrudi {
  Strip kind;
  std::vector<StripMonomial> monomials;
};
JacobiTrudi jacobi_trudi(const Partition& mu, const Box& box);

// Formal polynomials in e_1..e_k and h_1..h_w with integer coefficients.
enum class SymbolKind { e, h };
struct FormalFactor {
  SymbolKind kind;
  int index;
  int exponent;
};
struct FormalTerm {
  std::int64_t coeff;
  std::vector<FormalFactor> factors;
};
using FormalPolynomial = std::vector<FormalTerm>;

/// Reduces a formal polynomial to the Schur basis, one class per degree that occurs.
std::map<int, GrassClass> expand_in_schur(const FormalPolynomial& expr, const SchurRing& ring);

}  // namespace motivic
