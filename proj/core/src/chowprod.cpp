#include "motivic/chowprod.hpp"

#include <stdexcept>

#include "motivic/binomial.hpp"

namespace motivic {

GeometrySpec GeometrySpec::make(int p, int n, int m) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
    throw std::invalid_argument("p = " + std::to_string(p) + " is not prime");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (m < 0 || m >= n) throw std::invalid_argument("m must satisfy 0 <= m < n");
  const auto degree = checked_power(static_cast<std::uint64_t>(p), n);
  if (degree > (1u << 15)) throw std::invalid_argument("p^n above 2^15 is not supported");
  GeometrySpec spec;
  spec.p = p;
  spec.n = n;
  spec.m = m;
  spec.k = static_cast<int>(checked_power(static_cast<std::uint64_t>(p), m));
  spec.d = static_cast<int>(degree) - 1;
  spec.w = static_cast<int>(degree) - spec.k;
  spec.dim_y = spec.k * spec.w;
  spec.shift_range = spec.dim_y - spec.d;
  return spec;
}

Scalar ProdClass::coefficient(int a, const Partition& lambda) const {
  auto it = terms_.find(Key{a, lambda});
  return it == terms_.end() ? 0 : it->second;
}

void ProdClass::add_term(int a, const Partition& lambda, Scalar c, const PrimeField& field) {
  if (a < 0 || a + lambda.size() != codegree_)
    throw std::invalid_argument("term H^" + std::to_string(a) + "*sigma" + lambda.to_string() +
                                " does not have codegree " + std::to_string(codegree_));
  c %= field.modulus();
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, lambda}, c);
  if (!inserted) {
    it->second = field.add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

ChowProduct::ChowProduct(const GeometrySpec& spec)
    : ChowProduct(PrimeField(static_cast<std::uint32_t>(spec.p)), spec.d, spec.box()) {
  geometry_ = spec;
}

ChowProduct::ChowProduct(PrimeField field, int d, Box box)
    : schur_(std::make_shared<const SchurRing>(field, box)), d_(d) {
  if (d < 0) throw std::invalid_argument("projective dimension must be nonnegative");
}

void ChowProduct::validate(const ProdClass& u) const {
  for (const auto& [key, c] : u.terms()) {
    (void)c;
    if (key.first > d_ || !schur_->box().contains(key.second))
      throw std::invalid_argument("term H^" + std::to_string(key.first) + "*sigma" +
                                  key.second.to_string() + " is outside this product ring");
  }
}

ProdClass ChowProduct::unit() const { return h_power(0); }

ProdClass ChowProduct::h_power(int a) const {
  if (a < 0) throw std::invalid_argument("negative power of H");
  ProdClass out(a);
  if (a <= d_) out.add_term(a, Partition{}, 1, field());
  return out;
}

ProdClass ChowProduct::lift(const GrassClass& y) const {
  schur_->validate(y);
  ProdClass out(y.degree());
  for (const auto& [lambda, c] : y.terms()) out.add_term(0, lambda, c, field());
  return out;
}

ProdClass ChowProduct::add(const ProdClass& u, const ProdClass& v) const {
  if (u.codegree() != v.codegree())
    throw std::invalid_argument("adding classes of different codegree");
  ProdClass out = u;
  for (const auto& [key, c] : v.terms()) out.add_term(key.first, key.second, c, field());
  return out;
}

ProdClass ChowProduct::subtract(const ProdClass& u, const ProdClass& v) const {
  return add(u, scale(v, field().neg(1)));
}

ProdClass ChowProduct::scale(const ProdClass& u, Scalar c) const {
  ProdClass out(u.codegree());
  c %= field().modulus();
  for (const auto& [key, x] : u.terms())
    out.add_term(key.first, key.second, field().mul(x, c), field());
  return out;
}

ProdClass ChowProduct::multiply(const ProdClass& u, const ProdClass& v) const {
  validate(u);
  validate(v);
  const auto& f = field();
  std::map<std::pair<int, int>, Scalar> acc;
  for (const auto& [kv, cv] : v.terms()) {
    const int mu_id = schur_->id_of(kv.second);
    for (const auto& [ku, cu] : u.terms()) {
      const int a = ku.first + kv.first;
      if (a > d_) continue;
      const Scalar c = f.mul(cu, cv);
      for (const auto& term : schur_->multiply_ids(schur_->id_of(ku.second), mu_id)) {
        Scalar& slot = acc[{a, term.id}];
        slot = f.add(slot, f.mul(c, term.coeff));
      }
    }
  }
  ProdClass out(u.codegree() + v.codegree());
  for (const auto& [key, c] : acc) out.add_term(key.first, schur_->partition(key.second), c, f);
  return out;
}

ProdClass ChowProduct::power(const ProdClass& u, int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  ProdClass out = unit();
  for (int i = 0; i < exponent; ++i) out = multiply(out, u);
  return out;
}

GrassClass ChowProduct::special_class(int i) const {
  if (i < 0) throw std::invalid_argument("negative Chern class index");
  GrassClass c = schur_->complete(i);
  return i % 2 == 0 ? c : schur_->scale(c, field().neg(1));
}

ProdClass ChowProduct::chern_T(int j) const {
  const int r = rank_T();
  if (j < 0 || j > r)
    throw std::invalid_argument("c_" + std::to_string(j) + "(T) needs 0 <= j <= " +
                                std::to_string(r));
  ProdClass out(j);
  for (int i = 0; i <= j; ++i) {
    const int a = j - i;
    if (a > d_) continue;
    const Scalar binom = lucas_binom(static_cast<std::uint64_t>(r - i),
                                     static_cast<std::uint64_t>(a), field().modulus());
    if (binom == 0) continue;
    const GrassClass ci = special_class(i);
    for (const auto& [lambda, c] : ci.terms())
      out.add_term(a, lambda, field().mul(binom, c), field());
  }
  return out;
}

std::vector<ProdClass> ChowProduct::inverse_chern_T(int j_max) const {
  if (j_max < 0) return {};
  std::lock_guard lock(inverse_mutex_);
  if (inverse_.empty()) inverse_.push_back(unit());
  while (static_cast<int>(inverse_.size()) <= j_max) {
    const int j = static_cast<int>(inverse_.size());
    ProdClass s(j);
    for (int i = 1; i <= std::min(j, rank_T()); ++i)
      s = subtract(s, multiply(chern_T(i), inverse_[static_cast<std::size_t>(j - i)]));
    inverse_.push_back(std::move(s));
  }
  return {inverse_.begin(), inverse_.begin() + j_max + 1};
}

GrassClass ChowProduct::pushforward(const ProdClass& u) const {
  validate(u);
  const Scalar sign = d_ % 2 == 0 ? 1 : field().neg(1);
  // (-1)^d is 1 mod p whenever d + 1 is a power of p.
  if (geometry_ && sign != 1) throw std::logic_error("point class sign is not 1 mod p");
  GrassClass out(u.codegree() - d_);
  for (const auto& [key, c] : u.terms())
    if (key.first == d_) out.add_term(key.second, field().mul(sign, c), field());
  return out;
}

std::string ChowProduct::to_string(const ProdClass& u) const {
  if (u.is_zero()) return "0";
  std::string out;
  for (const auto& [key, c] : u.terms()) {
    if (!out.empty()) out += " + ";
    std::vector<std::string> factors;
    if (c != 1) factors.push_back(std::to_string(c));
    if (key.first == 1) factors.push_back("H");
    if (key.first > 1) factors.push_back("H^" + std::to_string(key.first));
    if (key.second.size() > 0) factors.push_back("sigma" + key.second.to_string());
    if (factors.empty()) factors.push_back("1");
    for (std::size_t i = 0; i < factors.size(); ++i) out += (i ? "*" : "") + factors[i];
  }
  return out;
}

}  // namespace motivic
