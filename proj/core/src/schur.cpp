#include "motivic/schur.hpp"

#include <algorithm>
#include <stdexcept>

namespace motivic {

Scalar GrassClass::coefficient(const Partition& lambda) const {
  auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

void GrassClass::add_term(const Partition& lambda, Scalar c, const PrimeField& field) {
  if (lambda.size() != degree_)
    throw std::invalid_argument("sigma" + lambda.to_string() + " has degree " +
                                std::to_string(lambda.size()) + ", class has degree " +
                                std::to_string(degree_));
  c %= field.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(lambda, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

struct SchurRing::ProductTable {
  JacobiTrudi expansion;
  std::unique_ptr<std::once_flag[]> ready;
  mutable std::vector<std::vector<Term>> entries;
};

SchurRing::SchurRing(PrimeField field, Box box) : field_(field), box_(box) {
  if (box.rows < 1 || box.cols < 0) throw std::invalid_argument("box needs rows >= 1, cols >= 0");
  partitions_ = partitions_in_box(box);
  position_in_size_.resize(partitions_.size());
  size_offsets_.assign(static_cast<std::size_t>(box.area()) + 2, 0);
  for (std::size_t id = 0; id < partitions_.size(); ++id) {
    ids_.emplace(partitions_[id], static_cast<int>(id));
    ++size_offsets_[static_cast<std::size_t>(partitions_[id].size()) + 1];
  }
  for (std::size_t s = 1; s < size_offsets_.size(); ++s) size_offsets_[s] += size_offsets_[s - 1];
  for (std::size_t id = 0; id < partitions_.size(); ++id)
    position_in_size_[id] =
        static_cast<int>(id) - size_offsets_[static_cast<std::size_t>(partitions_[id].size())];
}

SchurRing::~SchurRing() = default;

int SchurRing::id_of(const Partition& lambda) const {
  auto it = ids_.find(lambda);
  return it == ids_.end() ? -1 : it->second;
}

int SchurRing::count_of_size(int s) const {
  if (s < 0 || s > box_.area()) return 0;
  return size_offsets_[static_cast<std::size_t>(s) + 1] - size_offsets_[static_cast<std::size_t>(s)];
}

int SchurRing::first_id_of_size(int s) const {
  if (s < 0 || s > box_.area()) throw std::out_of_range("degree outside the box");
  return size_offsets_[static_cast<std::size_t>(s)];
}

namespace {

void expand_determinant(const std::vector<int>& parts, int bound, std::size_t row,
                        std::vector<bool>& used, int inversions, std::vector<int>& factors,
                        std::map<std::vector<int>, std::int64_t>& out) {
  const std::size_t n = parts.size();
  if (row == n) {
    auto key = factors;
    std::sort(key.begin(), key.end());
    out[key] += (inversions % 2 == 0) ? 1 : -1;
    return;
  }
  int larger_used = 0;
  for (std::size_t col = n; col-- > 0;) {
    if (used[col]) {
      ++larger_used;
      continue;
    }
    const int index = parts[row] - static_cast<int>(row) + static_cast<int>(col);
    if (index < 0 || index > bound) continue;
    used[col] = true;
    if (index > 0) factors.push_back(index);
    expand_determinant(parts, bound, row + 1, used, inversions + larger_used, factors, out);
    if (index > 0) factors.pop_back();
    used[col] = false;
  }
}

}  // namespace

JacobiTrudi jacobi_trudi(const Partition& mu, const Box& box) {
  JacobiTrudi result{Strip::row, {}};
  std::vector<int> parts = mu.parts();
  int bound = box.cols;
  if (mu.length() > mu[0]) {
    result.kind = Strip::column;
    parts = conjugate(mu).parts();
    bound = box.rows;
  }
  std::map<std::vector<int>, std::int64_t> collected;
  std::vector<bool> used(parts.size(), false);
  std::vector<int> factors;
  expand_determinant(parts, bound, 0, used, 0, factors, collected);
  for (auto& [key, coeff] : collected)
    if (coeff != 0) result.monomials.push_back({key, coeff});
  return result;
}

const SchurRing::ProductTable& SchurRing::table_for(int mu_id) const {
  std::lock_guard lock(tables_mutex_);
  auto& slot = tables_[mu_id];
  if (!slot) {
    slot = std::make_unique<ProductTable>();
    slot->expansion = jacobi_trudi(partition(mu_id), box_);
    slot->ready = std::make_unique<std::once_flag[]>(partitions_.size());
    slot->entries.resize(partitions_.size());
  }
  return *slot;
}

std::vector<SchurRing::Term> SchurRing::compute_product(int lambda_id,
                                                        const ProductTable& table) const {
  std::map<int, Scalar> total;
  for (const auto& monomial : table.expansion.monomials) {
    std::map<int, Scalar> current{{lambda_id, 1}};
    for (int factor : monomial.factors) {
      std::map<int, Scalar> next;
      for (const auto& [id, c] : current)
        for (const auto& nu : pieri(partition(id), factor, table.expansion.kind, box_)) {
          Scalar& slot = next[id_of(nu)];
          slot = field_.add(slot, c);
        }
      current = std::move(next);
      if (current.empty()) break;
    }
    const Scalar coeff = field_.normalize(monomial.coeff);
    for (const auto& [id, c] : current) {
      Scalar& slot = total[id];
      slot = field_.add(slot, field_.mul(coeff, c));
    }
  }
  std::vector<Term> out;
  for (const auto& [id, c] : total)
    if (c != 0) out.push_back({id, c});
  return out;
}

std::span<const SchurRing::Term> SchurRing::multiply_ids(int lambda_id, int mu_id) const {
  return products_with(mu_id)(lambda_id);
}

SchurRing::ProductView SchurRing::products_with(int mu_id) const {
  return ProductView(this, &table_for(mu_id));
}

std::span<const SchurRing::Term> SchurRing::ProductView::operator()(int lambda_id) const {
  const auto& table = *static_cast<const ProductTable*>(table_);
  const auto index = static_cast<std::size_t>(lambda_id);
  std::call_once(table.ready[index],
                 [&] { table.entries[index] = ring_->compute_product(lambda_id, table); });
  return table.entries[index];
}

GrassClass SchurRing::unit() const { return sigma(Partition{}); }

GrassClass SchurRing::sigma(const Partition& lambda) const {
  GrassClass out(lambda.size());
  if (box_.contains(lambda)) out.add_term(lambda, 1, field_);
  return out;
}

GrassClass SchurRing::elementary(int i) const {
  if (i < 0) throw std::invalid_argument("negative generator index");
  return sigma(Partition(std::vector<int>(static_cast<std::size_t>(i), 1)));
}

GrassClass SchurRing::complete(int i) const {
  if (i < 0) throw std::invalid_argument("negative generator index");
  return i == 0 ? unit() : sigma(Partition{i});
}

void SchurRing::validate(const GrassClass& x) const {
  for (const auto& [lambda, c] : x.terms()) {
    (void)c;
    if (!box_.contains(lambda))
      throw std::invalid_argument("sigma" + lambda.to_string() + " does not fit the " +
                                  std::to_string(box_.rows) + "x" + std::to_string(box_.cols) +
                                  " box of this ring");
  }
}

GrassClass SchurRing::add(const GrassClass& a, const GrassClass& b) const {
  if (a.degree() != b.degree()) throw std::invalid_argument("adding classes of different degree");
  GrassClass out = a;
  for (const auto& [lambda, c] : b.terms()) out.add_term(lambda, c, field_);
  return out;
}

GrassClass SchurRing::subtract(const GrassClass& a, const GrassClass& b) const {
  return add(a, scale(b, field_.neg(1)));
}

GrassClass SchurRing::scale(const GrassClass& a, Scalar c) const {
  GrassClass out(a.degree());
  for (const auto& [lambda, x] : a.terms()) out.add_term(lambda, field_.mul(x, c % field_.modulus()), field_);
  return out;
}

GrassClass SchurRing::multiply(const GrassClass& a, const GrassClass& b) const {
  validate(a);
  validate(b);
  std::map<int, Scalar> acc;
  for (const auto& [mu, cm] : b.terms()) {
    const int mu_id = id_of(mu);
    for (const auto& [lambda, cl] : a.terms()) {
      const Scalar c = field_.mul(cl, cm);
      for (const auto& term : multiply_ids(id_of(lambda), mu_id)) {
        Scalar& slot = acc[term.id];
        slot = field_.add(slot, field_.mul(c, term.coeff));
      }
    }
  }
  GrassClass out(a.degree() + b.degree());
  for (const auto& [id, c] : acc) out.add_term(partition(id), c, field_);
  return out;
}

GrassClass SchurRing::power(const GrassClass& a, int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  GrassClass out = unit();
  for (int i = 0; i < exponent; ++i) out = multiply(out, a);
  return out;
}

std::string SchurRing::to_string(const GrassClass& x) const {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [lambda, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    if (lambda.size() == 0) {
      out += std::to_string(c);
      continue;
    }
    if (c != 1) out += std::to_string(c) + "*";
    out += "sigma" + lambda.to_string();
  }
  return out;
}

std::map<int, GrassClass> expand_in_schur(const FormalPolynomial& expr, const SchurRing& ring) {
  std::map<int, GrassClass> graded;
  for (const auto& term : expr) {
    GrassClass value = ring.scale(ring.unit(), ring.field().normalize(term.coeff));
    for (const auto& factor : term.factors) {
      if (factor.index < 0 || factor.exponent < 0)
        throw std::invalid_argument("malformed formal factor");
      const GrassClass generator =
          factor.kind == SymbolKind::e ? ring.elementary(factor.index) : ring.complete(factor.index);
      value = ring.multiply(value, ring.power(generator, factor.exponent));
    }
    auto [it, inserted] = graded.try_emplace(value.degree(), value);
    if (!inserted) it->second = ring.add(it->second, value);
  }
  return graded;
}

}  // namespace motivic
