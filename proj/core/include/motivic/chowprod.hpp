#pragma once

// Ch(P^d x G(k, n); F_p) and the Chern classes of T = T_1 [x] (-T_k)^dual.
//
// h = c_1(T_1) is the generator of the first factor, so the hyperplane class
// is -h and the class of a point is (-h)^d.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "motivic/schur.hpp"

namespace motivic {

/// Parameters (p, n, m) of X(p^m, D) for a division algebra D of degree p^n.
struct GeometrySpec {
  int p = 2;
  int n = 1;
  int m = 0;
  int d = 1;            // dim X(1, D) = p^n - 1
  int k = 1;            // p^m, rows of the Schubert box
  int w = 1;            // p^n - p^m: rank of T, columns of the box
  int dim_y = 1;        // p^m (p^n - p^m)
  int shift_range = 0;  // dim Y - dim X

  /// Throws std::invalid_argument for non-prime p, n < 1, m outside [0, n),
  /// or p^n above 2^15.
  static GeometrySpec make(int p, int n, int m);

  Box box() const noexcept { return {k, w}; }

  friend bool operator==(const GeometrySpec&, const GeometrySpec&) = default;
};

/// Homogeneous element sum c * h^a [x] sigma_lambda with a + |lambda| = codegree.
/// Terms iterate with the h-exponent as the major key, descending.
class ProdClass {
 public:
  using Key = std::pair<int, Partition>;
  using Terms = std::map<Key, Scalar, std::greater<>>;

  explicit ProdClass(int codegree = 0) : codegree_(codegree) {}

  int codegree() const noexcept { return codegree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(int a, const Partition& lambda) const;

  void add_term(int a, const Partition& lambda, Scalar c, const PrimeField& field);

  friend bool operator==(const ProdClass&, const ProdClass&) = default;

 private:
  int codegree_;
  Terms terms_;
};

class ChowProduct {
 public:
  explicit ChowProduct(const GeometrySpec& spec);
  /// A bare P^d x G product with no Severi-Brauer interpretation.
  ChowProduct(PrimeField field, int d, Box box);

  const PrimeField& field() const noexcept { return schur_->field(); }
  const SchurRing& schur() const noexcept { return *schur_; }
  std::shared_ptr<const SchurRing> schur_ptr() const noexcept { return schur_; }
  int d() const noexcept { return d_; }
  int rank_T() const noexcept { return schur_->box().cols; }
  int top_codegree() const noexcept { return d_ + schur_->top_degree(); }
  const std::optional<GeometrySpec>& geometry() const noexcept { return geometry_; }

  ProdClass unit() const;
  /// h^a [x] 1; zero past the top power.
  ProdClass h_power(int a) const;
  /// 1 [x] y.
  ProdClass lift(const GrassClass& y) const;

  ProdClass add(const ProdClass& u, const ProdClass& v) const;
  ProdClass subtract(const ProdClass& u, const ProdClass& v) const;
  ProdClass scale(const ProdClass& u, Scalar c) const;
  ProdClass multiply(const ProdClass& u, const ProdClass& v) const;
  ProdClass power(const ProdClass& u, int exponent) const;

  /// c_i((-T_k)^dual) = (-1)^i sigma_(i); zero for i > rank_T().
  GrassClass special_class(int i) const;
  /// c~_i = c_i(T_k^dual) = sigma_(1^i).
  GrassClass dual_special_class(int i) const { return schur_->elementary(i); }

  /// c_j(T) = sum_i C(r - i, j - i) h^(j-i) [x] c_i, binomials mod p.
  /// Throws std::invalid_argument unless 0 <= j <= rank_T().
  ProdClass chern_T(int j) const;

  /// s_0..s_jmax with s = c(T)^(-1) = c(-T), memoized.
  std::vector<ProdClass> inverse_chern_T(int j_max) const;

  /// Projection to the Grassmannian factor: the h^d coefficients, times the
  /// sign (-1)^d of [pt] = (-h)^d.
  GrassClass pushforward(const ProdClass& u) const;

  void validate(const ProdClass& u) const;
  /// "2*H^3*sigma[2] + sigma[5]"; zero prints as "0".
  std::string to_string(const ProdClass& u) const;

 private:
  std::shared_ptr<const SchurRing> schur_;
  int d_;
  std::optional<GeometrySpec> geometry_;

  mutable std::mutex inverse_mutex_;
  mutable std::vector<ProdClass> inverse_;
};

}  // namespace motivic
