#include <doctest.h>

#include <stdexcept>

#include "motivic/binomial.hpp"
#include "motivic/chowprod.hpp"
#include "oracles/exact_binomial.hpp"
#include "oracles/schur_poly.hpp"

using namespace motivic;

namespace {

ProdClass term(const ChowProduct& R, int a, std::initializer_list<int> parts, Scalar c = 1) {
  const Partition lambda(parts);
  ProdClass u(a + lambda.size());
  u.add_term(a, lambda, c, R.field());
  return u;
}

ProdClass lift(const ChowProduct& R, const GrassClass& y) { return R.lift(y); }

}  // namespace

TEST_CASE("geometry spec derived constants") {
  const auto s = GeometrySpec::make(3, 3, 1);
  CHECK(s.d == 26);
  CHECK(s.k == 3);
  CHECK(s.w == 24);
  CHECK(s.dim_y == 72);
  CHECK(s.shift_range == 46);
  CHECK(GeometrySpec::make(2, 3, 2).shift_range == 9);
  CHECK_THROWS_AS(GeometrySpec::make(4, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::make(3, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::make(3, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::make(3, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(GeometrySpec::make(2, 16, 1), std::invalid_argument);
}

TEST_CASE("lucas binomials and valuations") {
  CHECK(lucas_binom(6, 2, 3) == 0);
  CHECK(lucas_binom(23, 1, 3) == 2);
  CHECK(lucas_binom(3, 5, 3) == 0);
  CHECK(vp(48, 2) == 4);
  CHECK(vp(7, 3) == 0);
  CHECK_THROWS_AS(vp(0, 2), std::invalid_argument);
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    for (unsigned a = 0; a <= 200; ++a)
      for (unsigned b = 0; b <= a + 1; ++b) REQUIRE(lucas_binom(a, b, p) == oracle::binomial_mod(a, b, p));
  CHECK(checked_power(3, 3) == 27);
  CHECK_THROWS_AS(checked_power(2, 63), std::overflow_error);
}

TEST_CASE("special_class examples") {
  const ChowProduct R(GeometrySpec::make(3, 3, 1));
  CHECK(R.special_class(0) == R.schur().unit());
  CHECK(R.special_class(1) == R.schur().scale(R.schur().sigma({1}), 2));
  CHECK(R.special_class(7) == R.schur().scale(R.schur().sigma({7}), 2));
  CHECK(R.special_class(25).is_zero());
  CHECK_THROWS_AS(R.special_class(-1), std::invalid_argument);
}

TEST_CASE("chern_T examples for (3,2,1)") {
  const ChowProduct R(GeometrySpec::make(3, 2, 1));
  CHECK(R.chern_T(0) == R.unit());
  CHECK(R.chern_T(1) == lift(R, R.special_class(1)));
  // c_2(T) = -h c_1 + c_2, with c_1 = -sigma[1] this is h sigma[1] + sigma[2].
  const auto c2 = R.add(R.scale(R.multiply(R.h_power(1), lift(R, R.special_class(1))), 2),
                        lift(R, R.special_class(2)));
  CHECK(R.chern_T(2) == c2);
  ProdClass top(6);
  for (int i = 0; i <= 6; ++i)
    top = R.add(top, R.multiply(R.h_power(6 - i), lift(R, R.special_class(i))));
  CHECK(R.chern_T(6) == top);
  CHECK_THROWS_AS(R.chern_T(7), std::invalid_argument);
  CHECK_THROWS_AS(R.chern_T(-1), std::invalid_argument);
}

TEST_CASE("chern_T(r) is sum h^(r-i) c_i for every small spec") {
  for (auto [p, n, m] : {std::tuple{2, 2, 1}, {2, 3, 1}, {2, 3, 2}, {3, 2, 1}, {5, 1, 0}}) {
    const ChowProduct R(GeometrySpec::make(p, n, m));
    const int r = R.rank_T();
    ProdClass want(r);
    for (int i = 0; i <= r; ++i) want = R.add(want, R.multiply(R.h_power(r - i), lift(R, R.special_class(i))));
    CHECK(R.chern_T(r) == want);
  }
}

TEST_CASE("prod_multiply examples") {
  const ChowProduct R(GeometrySpec::make(3, 2, 1));
  const auto u = R.add(term(R, 2, {1}), term(R, 0, {2, 1}, 2));
  CHECK(R.multiply(u, R.unit()) == u);
  CHECK(R.multiply(R.h_power(8), R.h_power(1)).is_zero());
  CHECK(R.h_power(9).is_zero());

  // beta_2 = c_6(T) c_2(T) c_2(T) = h^8 (x) c_1^2 + lower h-powers.
  const auto beta = R.multiply(R.multiply(R.chern_T(6), R.chern_T(2)), R.chern_T(2));
  const auto c1sq = R.schur().power(R.special_class(1), 2);
  for (const auto& [lambda, c] : c1sq.terms()) CHECK(beta.coefficient(8, lambda) == c);
  for (const auto& [key, c] : beta.terms()) CHECK(key.first <= 8);
}

TEST_CASE("classes outside the ring are rejected") {
  const ChowProduct R(GeometrySpec::make(2, 2, 1));
  CHECK_THROWS_AS(R.multiply(term(R, 4, {}), R.unit()), std::invalid_argument);
  CHECK_THROWS_AS(R.multiply(term(R, 0, {3}), R.unit()), std::invalid_argument);
  ProdClass u(2);
  CHECK_THROWS_AS(u.add_term(0, Partition({1}), 1, R.field()), std::invalid_argument);
  CHECK_THROWS_AS(R.add(term(R, 1, {}), term(R, 0, {1, 1})), std::invalid_argument);
}

TEST_CASE("pushforward examples") {
  const ChowProduct R(GeometrySpec::make(3, 2, 1));
  CHECK(R.pushforward(term(R, 8, {2})) == R.schur().sigma({2}));
  CHECK(R.pushforward(term(R, 3, {2})).is_zero());
  const auto beta2 = R.multiply(R.multiply(R.chern_T(6), R.chern_T(2)), R.chern_T(2));
  const auto pushed = R.pushforward(beta2);
  GrassClass want(2);
  want.add_term({2}, 1, R.field());
  want.add_term({1, 1}, 1, R.field());
  CHECK(pushed == want);
  CHECK(pushed == R.schur().power(R.special_class(1), 2));

  // p = 2 and odd d: the sign (-1)^d is 1 in F_2.
  const ChowProduct S(GeometrySpec::make(2, 2, 1));
  CHECK(S.pushforward(term(S, 3, {1})) == S.schur().sigma({1}));
  // A bare product with odd d over F_3 carries the sign -1.
  const ChowProduct bare(PrimeField(3), 1, Box{1, 1});
  GrassClass minus(0);
  minus.add_term({}, 2, bare.field());
  CHECK(bare.pushforward(bare.h_power(1)) == minus);
}

TEST_CASE("inverse_chern_T examples for (3,3,1)") {
  const ChowProduct R(GeometrySpec::make(3, 3, 1));
  const auto s = R.inverse_chern_T(4);
  REQUIRE(s.size() == 5);
  CHECK(s[0] == R.unit());
  const auto e = [&](int i) { return lift(R, R.dual_special_class(i)); };
  // c_2(-T) = -h c~1 + c~2
  CHECK(s[2] == R.add(R.scale(R.multiply(R.h_power(1), e(1)), 2), e(2)));
  // c_3(-T) = h^3 + h^2 c~1 + h c~2 + c~3
  ProdClass s3(3);
  for (int i = 0; i <= 3; ++i) s3 = R.add(s3, R.multiply(R.h_power(3 - i), e(i)));
  CHECK(s[3] == s3);
  CHECK(s[4].is_zero());
  CHECK(R.inverse_chern_T(-1).empty());
}

TEST_CASE("the cycle e agrees with an independent polynomial computation") {
  // Ch^j(G(3, 27)) is the polynomial ring F_3[c~1, c~2, c~3] for j <= 23, and
  // the h^26 coefficient can be computed there directly.
  using oracle::Poly;
  const auto var = [](int i, int exp, std::int64_t c = 1) {
    oracle::Monomial m(4, 0);  // h, a, b, c
    m[static_cast<std::size_t>(i)] = exp;
    return Poly{{m, c}};
  };
  const auto sum = [](std::initializer_list<Poly> ps) {
    Poly out;
    for (const auto& p : ps)
      for (const auto& [m, c] : p) oracle::add_into(out, m, c);
    return out;
  };
  const Poly s2 = sum({oracle::multiply(var(0, 1, -1), var(1, 1)), var(2, 1)});
  const Poly s3 = sum({var(0, 3), oracle::multiply(var(0, 2), var(1, 1)), oracle::multiply(var(0, 1), var(2, 1)),
                       var(3, 1)});
  Poly prod{{oracle::Monomial(4, 0), 1}};
  for (int i = 0; i < 11; ++i) prod = oracle::multiply(prod, s2);
  for (int i = 0; i < 8; ++i) prod = oracle::multiply(prod, s3);

  FormalPolynomial coefficient;
  for (const auto& [m, c] : prod) {
    if (m[0] != 26) continue;
    FormalTerm t{c, {}};
    for (int i = 1; i <= 3; ++i)
      if (m[static_cast<std::size_t>(i)] > 0) t.factors.push_back({SymbolKind::e, i, m[static_cast<std::size_t>(i)]});
    coefficient.push_back(t);
  }

  const ChowProduct R(GeometrySpec::make(3, 3, 1));
  const auto s = R.inverse_chern_T(3);
  const auto e = R.pushforward(R.multiply(R.power(s[2], 11), R.power(s[3], 8)));
  CHECK(expand_in_schur(coefficient, R.schur()).at(20) == e);

  // The oracle polynomial is the negative of the printed expansion, term by term mod 3.
  const std::map<std::vector<int>, int> printed{
      {{17, 0, 1}, -1}, {{16, 2, 0}, 1}, {{14, 3, 0}, -1}, {{14, 0, 2}, -1}, {{13, 2, 1}, -1},
      {{12, 4, 0}, -1}, {{11, 3, 1}, 1}, {{11, 0, 3}, -1}, {{10, 5, 0}, -1}, {{2, 9, 0}, -1}};
  std::map<std::vector<int>, int> reduced;
  for (const auto& t : coefficient) {
    std::vector<int> exps(3, 0);
    for (const auto& f : t.factors) exps[static_cast<std::size_t>(f.index - 1)] = f.exponent;
    const int r = static_cast<int>(((t.coeff % 3) + 3) % 3);
    if (r) reduced[exps] = r;
  }
  std::map<std::vector<int>, int> negated_printed;
  for (const auto& [exps, c] : printed) negated_printed[exps] = ((-c) % 3 + 3) % 3;
  CHECK(reduced == negated_printed);
}

TEST_CASE("text form of product classes") {
  const ChowProduct R(GeometrySpec::make(3, 2, 1));
  CHECK(R.to_string(ProdClass(3)) == "0");
  CHECK(R.to_string(R.add(term(R, 3, {2}, 2), term(R, 1, {4}))) == "2*H^3*sigma[2] + H*sigma[4]");
}
