#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "motivic/gflin.hpp"

using namespace motivic;

namespace {

FpVector vec(const PrimeField& f, std::vector<std::int64_t> v) { return FpVector::from_dense(f, v); }

}  // namespace

TEST_CASE("prime field construction and arithmetic") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(4), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(0), std::invalid_argument);
  const PrimeField f(7);
  CHECK(f.normalize(-1) == 6);
  CHECK(f.normalize(15) == 1);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.neg(0) == 0);
  CHECK(f.mul(6, 6) == 1);
  CHECK(f.pow(3, 6) == 1);
  for (Scalar a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK_THROWS_AS(f.inv(0), std::domain_error);
}

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647ull));
  CHECK_FALSE(is_prime(2147483649ull));
}

TEST_CASE("FpVector keeps canonical nonzero entries") {
  const PrimeField f(3);
  const auto v = FpVector::from_entries(f, 5, {{3, 4}, {0, -1}, {1, 3}});
  REQUIRE(v.nnz() == 2);
  CHECK(v.entries()[0] == FpVector::Entry{0, 2});
  CHECK(v.entries()[1] == FpVector::Entry{3, 1});
  CHECK(v.at(1) == 0);
  CHECK(v.to_dense() == std::vector<Scalar>{2, 0, 0, 1, 0});
  CHECK_THROWS_AS(FpVector::from_entries(f, 2, {{2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FpVector::from_entries(f, 4, {{1, 1}, {1, 2}}), std::invalid_argument);
}

TEST_CASE("span_insert examples over F_3") {
  const PrimeField f(3);
  EchelonSpan s(f, 3);
  CHECK(s.rank() == 0);
  CHECK(s.insert(vec(f, {1, 2, 0})));
  CHECK(s.rank() == 1);
  CHECK_FALSE(s.insert(vec(f, {2, 1, 0})));
  CHECK(s.rank() == 1);
  CHECK_FALSE(s.insert(vec(f, {0, 0, 0})));
  CHECK(s.rank() == 1);
  CHECK_THROWS_AS(s.insert(vec(f, {1, 0})), std::invalid_argument);
}

TEST_CASE("reduce examples") {
  const PrimeField f(3);
  EchelonSpan s(f, 3);
  s.insert(vec(f, {1, 2, 0}));
  CHECK(s.reduce(vec(f, {2, 1, 0})).is_zero());

  EchelonSpan empty(f, 3);
  const auto v = vec(f, {0, 2, 1});
  CHECK(empty.reduce(v) == v);

  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField g(p);
    EchelonSpan id(g, 3);
    id.insert(vec(g, {1, 0, 0}));
    id.insert(vec(g, {0, 1, 0}));
    id.insert(vec(g, {0, 0, 1}));
    CHECK(id.rank() == 3);
    CHECK(id.reduce(vec(g, {1, 1, 1})).is_zero());
  }
  CHECK_THROWS_AS(s.reduce(vec(f, {1, 1})), std::invalid_argument);
}

TEST_CASE("echelon form is reduced with lowest-index pivots") {
  const PrimeField f(5);
  EchelonSpan s(f, 4);
  s.insert(vec(f, {0, 3, 1, 0}));
  s.insert(vec(f, {2, 1, 0, 4}));
  s.insert(vec(f, {0, 0, 2, 3}));
  REQUIRE(s.rank() == 3);
  CHECK(s.pivots() == std::vector<std::size_t>{0, 1, 2});
  for (std::size_t r = 0; r < s.rank(); ++r) {
    const auto& row = s.rows()[r];
    CHECK(row.entries().front().index == s.pivots()[r]);
    CHECK(row.entries().front().value == 1);
    for (std::size_t other = 0; other < s.rank(); ++other)
      if (other != r) CHECK(s.rows()[other].at(s.pivots()[r]) == 0);
  }
}

TEST_CASE("dense insertion agrees with sparse insertion") {
  const PrimeField f(3);
  EchelonSpan a(f, 3), b(f, 3);
  std::vector<Scalar> buf{1, 2, 0};
  CHECK(a.insert_dense(buf));
  CHECK(b.insert(vec(f, {1, 2, 0})));
  std::vector<Scalar> buf2{2, 1, 0};
  CHECK_FALSE(a.insert_dense(buf2));
  CHECK(a.rows() == b.rows());
}
