#include "motivic/subring.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>

namespace motivic {

AmbientIndex::AmbientIndex(const SchurRing& ring, int d, int codegree)
    : ring_(&ring), d_(d), codegree_(codegree) {
  const int top_a = std::min(codegree, d);
  offsets_.assign(static_cast<std::size_t>(std::max(top_a, -1) + 2), 0);
  for (int a = 0; a <= top_a; ++a) {
    const int s = codegree - a;
    offsets_[static_cast<std::size_t>(a)] = entries_.size();
    const int count = ring.count_of_size(s);
    if (count == 0) continue;
    const int first = ring.first_id_of_size(s);
    for (int id = first; id < first + count; ++id) entries_.emplace_back(a, id);
  }
  if (top_a >= 0) offsets_[static_cast<std::size_t>(top_a) + 1] = entries_.size();
}

std::pair<std::size_t, std::size_t> AmbientIndex::block(int a) const {
  if (a < 0 || a > std::min(codegree_, d_)) return {0, 0};
  const auto start = offsets_[static_cast<std::size_t>(a)];
  return {start, offsets_[static_cast<std::size_t>(a) + 1] - start};
}

long AmbientIndex::coordinate(int a, int partition_id) const {
  if (partition_id < 0 || a < 0 || a > std::min(codegree_, d_)) return -1;
  if (ring_->partition(partition_id).size() != codegree_ - a) return -1;
  return static_cast<long>(offsets_[static_cast<std::size_t>(a)]) +
         ring_->position_in_size(partition_id);
}

FpVector GradedSpan::coordinates(const ProdClass& u) const {
  ring_->validate(u);
  const int j = u.codegree();
  if (j < 0 || j > max_codegree())
    throw std::out_of_range("codegree " + std::to_string(j) + " beyond the computed range");
  const auto& idx = index(j);
  std::vector<std::pair<std::size_t, std::int64_t>> entries;
  for (const auto& [key, c] : u.terms())
    entries.emplace_back(static_cast<std::size_t>(idx.coordinate(key.first, ring_->schur().id_of(key.second))), c);
  return FpVector::from_entries(ring_->field(), idx.size(), std::move(entries));
}

ProdClass GradedSpan::to_class(int j, const FpVector& v) const {
  const auto& idx = index(j);
  ProdClass out(j);
  for (const auto& e : v.entries()) {
    const auto [a, id] = idx.entry(e.index);
    out.add_term(a, ring_->schur().partition(id), e.value, ring_->field());
  }
  return out;
}

bool GradedSpan::contains(const ProdClass& u) const { return span(u.codegree()).contains(coordinates(u)); }

namespace {

struct GeneratorTerm {
  int a;
  SchurRing::ProductView products;
  Scalar coeff;
};

struct Generator {
  int degree;
  std::vector<GeneratorTerm> terms;
};

std::vector<Generator> make_generators(const ChowProduct& ring, GeneratorSet set) {
  std::vector<ProdClass> classes;
  if (set == GeneratorSet::chern_T) {
    for (int i = 1; i <= ring.rank_T(); ++i) classes.push_back(ring.chern_T(i));
  } else {
    const int k = ring.schur().box().rows;
    auto inverse = ring.inverse_chern_T(k);
    classes.assign(inverse.begin() + 1, inverse.end());
  }
  std::vector<Generator> out;
  for (const auto& g : classes) {
    Generator gen{g.codegree(), {}};
    for (const auto& [key, c] : g.terms())
      gen.terms.push_back({key.first, ring.schur().products_with(ring.schur().id_of(key.second)), c});
    if (!gen.terms.empty()) out.push_back(std::move(gen));
  }
  return out;
}

// acc += src * generator, with src in the coordinates of `from` and acc in those of `to`.
void multiply_into(const ChowProduct& ring, const AmbientIndex& from, const FpVector& src,
                   const Generator& gen, const AmbientIndex& to, std::vector<std::uint64_t>& acc) {
  const auto& schur = ring.schur();
  const std::uint64_t p = ring.field().modulus();
  const bool small = p < (1u << 16);
  for (const auto& e : src.entries()) {
    const auto [a, lambda] = from.entry(e.index);
    for (const auto& g : gen.terms) {
      const int target = a + g.a;
      if (target > ring.d()) continue;
      const std::size_t base = to.block(target).first;
      const std::uint64_t c = static_cast<std::uint64_t>(e.value) * g.coeff % p;
      for (const auto& t : g.products(lambda)) {
        auto& slot = acc[base + static_cast<std::size_t>(schur.position_in_size(t.id))];
        slot = small ? slot + c * t.coeff : (slot + c * t.coeff) % p;
      }
    }
  }
}

}  // namespace

GradedSpan graded_spans(const ChowProduct& ring, int max_codegree, const SubringOptions& options) {
  if (max_codegree < 0) throw std::invalid_argument("max_codegree must be nonnegative");
  GradedSpan out(ring);
  const auto& schur = ring.schur();
  for (int j = 0; j <= max_codegree; ++j) {
    out.indices_.emplace_back(schur, ring.d(), j);
    out.spans_.emplace_back(ring.field(), out.indices_.back().size());
    out.stats_.push_back({out.indices_.back().size(), 0, 0});
  }
  out.spans_[0].insert(out.coordinates(ring.unit()));
  out.stats_[0].candidates = 1;
  out.stats_[0].rank = out.spans_[0].rank();

  const auto generators = make_generators(ring, options.generators);
  const bool bounded = options.stop_at_rank_bound && ring.geometry().has_value();
  const int threads = std::max(1, options.threads);
  const std::uint64_t p = ring.field().modulus();

  for (int j = 1; j <= max_codegree; ++j) {
    auto& span = out.spans_[static_cast<std::size_t>(j)];
    const auto& to = out.indices_[static_cast<std::size_t>(j)];
    const std::size_t bound =
        bounded ? static_cast<std::size_t>(schur.count_of_size(j)) : std::numeric_limits<std::size_t>::max();

    std::vector<std::pair<const Generator*, const FpVector*>> candidates;
    for (const auto& gen : generators) {
      if (gen.degree > j) continue;
      for (const auto& row : out.spans_[static_cast<std::size_t>(j - gen.degree)].rows())
        candidates.emplace_back(&gen, &row);
    }

    // Products for a batch are formed in parallel (worker t takes slots
    // t, t + threads, ...); insertion stays serial and in candidate order.
    const std::size_t batch_size = threads == 1 ? 1 : static_cast<std::size_t>(threads) * 8;
    std::vector<std::vector<std::uint64_t>> buffers(batch_size);
    std::vector<Scalar> dense(to.size());
    std::size_t tried = 0;
    for (std::size_t start = 0; start < candidates.size() && span.rank() < bound && to.size() > 0;
         start += batch_size) {
      const std::size_t batch = std::min(candidates.size() - start, batch_size);
      auto work = [&](std::size_t first) {
        for (std::size_t slot = first; slot < batch; slot += static_cast<std::size_t>(threads)) {
          const auto [gen, row] = candidates[start + slot];
          auto& acc = buffers[slot];
          acc.assign(to.size(), 0);
          multiply_into(ring, out.indices_[static_cast<std::size_t>(j - gen->degree)], *row, *gen, to, acc);
        }
      };
      if (batch == 1) {
        work(0);
      } else {
        std::vector<std::jthread> pool;
        const auto workers = std::min(batch, static_cast<std::size_t>(threads));
        for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t);
      }
      for (std::size_t slot = 0; slot < batch && span.rank() < bound; ++slot) {
        for (std::size_t i = 0; i < dense.size(); ++i)
          dense[i] = static_cast<Scalar>(buffers[slot][i] % p);
        span.insert_dense(dense);
        ++tried;
      }
    }
    out.stats_[static_cast<std::size_t>(j)].candidates = tried;
    out.stats_[static_cast<std::size_t>(j)].rank = span.rank();
  }
  return out;
}

FpVector grass_coordinates(const SchurRing& ring, const GrassClass& x) {
  ring.validate(x);
  std::vector<std::pair<std::size_t, std::int64_t>> entries;
  for (const auto& [lambda, c] : x.terms())
    entries.emplace_back(static_cast<std::size_t>(ring.position_in_size(ring.id_of(lambda))), c);
  return FpVector::from_entries(ring.field(), static_cast<std::size_t>(ring.count_of_size(x.degree())),
                                std::move(entries));
}

GrassClass grass_class(const SchurRing& ring, int degree, const FpVector& v) {
  GrassClass out(degree);
  if (v.is_zero()) return out;
  const int first = ring.first_id_of_size(degree);
  for (const auto& e : v.entries())
    out.add_term(ring.partition(first + static_cast<int>(e.index)), e.value, ring.field());
  return out;
}

VSpace::VSpace(std::shared_ptr<const SchurRing> ring, int k)
    : ring_(std::move(ring)),
      k_(k),
      basis_(ring_->field(), static_cast<std::size_t>(ring_->count_of_size(k))) {}

std::vector<GrassClass> VSpace::basis_classes() const {
  std::vector<GrassClass> out;
  for (const auto& row : basis_.rows()) out.push_back(grass_class(*ring_, k_, row));
  return out;
}

bool VSpace::contains(const GrassClass& x) const {
  if (x.degree() != k_)
    throw std::invalid_argument("class of degree " + std::to_string(x.degree()) +
                                " tested against V_" + std::to_string(k_));
  return basis_.contains(grass_coordinates(*ring_, x));
}

bool VSpace::insert(const GrassClass& x) {
  if (x.degree() != k_)
    throw std::invalid_argument("class of degree " + std::to_string(x.degree()) +
                                " inserted into V_" + std::to_string(k_));
  return basis_.insert(grass_coordinates(*ring_, x));
}

VSpace pushforward_space(const GradedSpan& spans, int k) {
  const auto& ring = spans.ring();
  const int j = ring.d() + k;
  if (k < 0 || j > spans.max_codegree())
    throw std::out_of_range("V_" + std::to_string(k) + " needs R^" + std::to_string(j));
  VSpace space(ring.schur_ptr(), k);
  for (const auto& row : spans.span(j).rows()) space.insert(ring.pushforward(spans.to_class(j, row)));
  return space;
}

std::vector<int> v_dims(const GeometrySpec& spec, int k_max, const SubringOptions& options) {
  if (k_max < 0 || k_max > spec.shift_range)
    throw std::invalid_argument("k_max must lie in [0, " + std::to_string(spec.shift_range) + "]");
  const ChowProduct ring(spec);
  const auto spans = graded_spans(ring, spec.d + k_max, options);
  std::vector<int> dims;
  for (int k = 0; k <= k_max; ++k) dims.push_back(static_cast<int>(pushforward_space(spans, k).dim()));
  return dims;
}

Membership v_basis_and_membership(const GradedSpan& spans, int k,
                                  std::span<const GrassClass> candidates) {
  for (const auto& c : candidates)
    if (c.degree() != k)
      throw std::invalid_argument("candidate of degree " + std::to_string(c.degree()) +
                                  " for V_" + std::to_string(k));
  Membership result{pushforward_space(spans, k), {}};
  for (const auto& c : candidates) result.members.push_back(result.space.contains(c));
  return result;
}

}  // namespace motivic
