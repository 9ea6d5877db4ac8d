#pragma once

// The subring R of rational cycles in Ch(P^d x G; F_p), generated by the Chern
// classes of T, and its pushforwards V_k = f_*(R^(d+k)) to the Grassmannian.

#include <cstddef>
#include <memory>
#include <span>
#include <utility>
#include <vector>

#include "motivic/chowprod.hpp"
#include "motivic/gflin.hpp"

namespace motivic {

/// Coordinates of Ch^j(P^d x G): pairs (a, lambda) with a ascending, then
/// lambda in ascending lexicographic order.
class AmbientIndex {
 public:
  AmbientIndex(const SchurRing& ring, int d, int codegree);

  int codegree() const noexcept { return codegree_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Coordinate of h^a [x] sigma_id, or -1 if that pair is not in this codegree.
  long coordinate(int a, int partition_id) const;
  /// (a, partition id) of a coordinate.
  std::pair<int, int> entry(std::size_t coordinate) const { return entries_.at(coordinate); }
  /// First coordinate of the block with h-exponent a, and the block length.
  std::pair<std::size_t, std::size_t> block(int a) const;

 private:
  const SchurRing* ring_;
  int d_;
  int codegree_;
  std::vector<std::size_t> offsets_;
  std::vector<std::pair<int, int>> entries_;
};

enum class GeneratorSet {
  chern_T,          // c_1(T), ..., c_r(T)
  inverse_chern_T,  // c_1(-T), ..., c_k(-T); generates the same ring
};

struct SubringOptions {
  GeneratorSet generators = GeneratorSet::chern_T;
  /// Stop a degree early once its rank reaches the number of partitions of j
  /// in the k x r box, which bounds dim R^j because c_i(-T) = 0 for i > k.
  bool stop_at_rank_bound = true;
  int threads = 1;
};

struct DegreeStats {
  std::size_t ambient = 0;
  std::size_t candidates = 0;
  std::size_t rank = 0;
};

/// Echelon bases of R^0..R^max_codegree. Keeps a pointer to the ring, which
/// must outlive it.
class GradedSpan {
 public:
  const ChowProduct& ring() const noexcept { return *ring_; }
  int max_codegree() const noexcept { return static_cast<int>(spans_.size()) - 1; }
  const AmbientIndex& index(int j) const { return indices_.at(static_cast<std::size_t>(j)); }
  const EchelonSpan& span(int j) const { return spans_.at(static_cast<std::size_t>(j)); }
  std::size_t rank(int j) const { return span(j).rank(); }
  const DegreeStats& stats(int j) const { return stats_.at(static_cast<std::size_t>(j)); }

  FpVector coordinates(const ProdClass& u) const;
  ProdClass to_class(int j, const FpVector& v) const;
  bool contains(const ProdClass& u) const;

 private:
  friend GradedSpan graded_spans(const ChowProduct&, int, const SubringOptions&);
  explicit GradedSpan(const ChowProduct& ring) : ring_(&ring) {}

  const ChowProduct* ring_;
  std::vector<AmbientIndex> indices_;
  std::vector<EchelonSpan> spans_;
  std::vector<DegreeStats> stats_;
};

/// R^0 = span{1}; R^j = span{ g_i * b : g_i generator of degree i <= j, b in a basis of R^(j-i) }.
/// Candidates are inserted in generator order, then basis-row order.
GradedSpan graded_spans(const ChowProduct& ring, int max_codegree, const SubringOptions& options = {});

/// Coordinates of a homogeneous class of Ch^k(G) among the size-k partitions.
FpVector grass_coordinates(const SchurRing& ring, const GrassClass& x);
GrassClass grass_class(const SchurRing& ring, int degree, const FpVector& v);

/// V_k with its echelon basis in Ch^k(G) coordinates.
class VSpace {
 public:
  VSpace(std::shared_ptr<const SchurRing> ring, int k);

  int k() const noexcept { return k_; }
  std::size_t dim() const noexcept { return basis_.rank(); }
  const EchelonSpan& basis() const noexcept { return basis_; }
  std::vector<GrassClass> basis_classes() const;

  /// Throws std::invalid_argument when x is not of degree k.
  bool contains(const GrassClass& x) const;
  bool insert(const GrassClass& x);

 private:
  std::shared_ptr<const SchurRing> ring_;
  int k_;
  EchelonSpan basis_;
};

/// V_k from an already computed graded span; needs max_codegree >= d + k.
VSpace pushforward_space(const GradedSpan& spans, int k);

/// [dim V_0, ..., dim V_kmax]; requires 0 <= k_max <= shift range.
std::vector<int> v_dims(const GeometrySpec& spec, int k_max, const SubringOptions& options = {});

struct Membership {
  VSpace space;
  std::vector<bool> members;
};
Membership v_basis_and_membership(const GradedSpan& spans, int k,
                                  std::span<const GrassClass> candidates);

}  // namespace motivic
