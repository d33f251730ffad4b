#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arrcount/exactlin.hpp"
#include "oracles.hpp"

using namespace arrcount;

namespace {

RatMatrix matrix(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> rs;
  std::size_t cols = 0;
  for (auto r : rows) {
    rs.emplace_back(r);
    cols = r.size();
  }
  return RatMatrix::from_rows(rs, cols);
}

std::vector<IntVector> random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<long> e(-3, 3);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows; ++i) {
    IntVector v(cols);
    for (std::size_t k = 0; k < cols; ++k) v[k] = e(rng);
    out.push_back(v);
  }
  // Force some dependence.
  if (rows >= 3) {
    IntVector sum(cols);
    for (std::size_t k = 0; k < cols; ++k) sum[k] = out[0][k] * 2 - out[1][k];
    out[2] = sum;
  }
  return out;
}

}  // namespace

TEST_CASE("primitive normalization examples") {
  CHECK(primitive_normalize(IntVector{2, -4, 6}) == IntVector{1, -2, 3});
  CHECK(primitive_normalize(IntVector{0, -3, 0}) == IntVector{0, 1, 0});
  CHECK(primitive_normalize(IntVector{5, 0, 0}) == IntVector{1, 0, 0});
}

TEST_CASE("primitive normalization is idempotent and scale invariant") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> e(-9, 9), k(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    IntVector v{e(rng), e(rng), e(rng), e(rng)};
    if (v.is_zero()) continue;
    const IntVector n = primitive_normalize(v);
    CHECK(primitive_normalize(n) == n);
    long s = k(rng);
    if (s == 0) s = 3;
    CHECK(primitive_normalize(v.scaled(s)) == n);
  }
}

TEST_CASE("rank examples") {
  CHECK(rank(RatMatrix::identity(3)) == 3);
  CHECK(rank(matrix({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(RatMatrix(4, 5)) == 0);
}

TEST_CASE("kernel basis examples") {
  const auto k1 = kernel_basis(matrix({{1, 0, 0}, {0, 1, 0}}));
  REQUIRE(k1.size() == 1);
  CHECK(primitive_normalize(k1[0]) == IntVector{0, 0, 1});

  const auto k2 = kernel_basis(matrix({{1, 1, 1}}));
  REQUIRE(k2.size() == 2);
  for (const auto& v : k2) CHECK(dot(v, IntVector{1, 1, 1}) == 0);

  CHECK(kernel_basis(RatMatrix::identity(3)).empty());
}

TEST_CASE("rank agrees with plain rational elimination; rank plus nullity is the column count") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + trial % 6, cols = 1 + (trial / 6) % 6;
    const auto rs = random_rows(rng, rows, cols);
    const std::size_t r = rank(rs, cols);
    CHECK(r == oracle::naive_rank(rs));
    const auto ker = kernel_basis(rs, cols);
    CHECK(r + ker.size() == cols);
    for (const auto& v : ker) {
      for (const auto& row : rs) CHECK(dot(row, v) == 0);
    }
    if (!ker.empty()) CHECK(oracle::naive_rank(ker) == ker.size());
  }
}

TEST_CASE("rational arithmetic stays canonical") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> e(-40, 40);
  for (int trial = 0; trial < 500; ++trial) {
    long b = e(rng), d = e(rng);
    if (b == 0) b = 1;
    if (d == 0) d = -7;
    const Rational x(Integer(e(rng)), Integer(b)), y(Integer(e(rng)), Integer(d));
    const Rational s = x + y;
    CHECK(s.den() > 0);
    CHECK(gcd(s.num(), s.den()) == 1);
    CHECK(Rational::parse(s.str()) == s);
    CHECK(s - y == x);
    CHECK(s.floor() <= s);
    CHECK(s.ceil() >= s);
    CHECK(s.ceil() - s.floor() == (s.is_integer() ? 0 : 1));
    CHECK(s.frac() >= 0);
    CHECK(s.frac() < 1);
    CHECK((s - s.frac()).is_integer());
  }
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-6/4") == Rational(Integer(-3), Integer(2)));
  CHECK(Rational::parse("5") == Rational(5));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("x"), Error);
  CHECK(Rational(Integer(-1), Integer(3)).frac() == Rational(Integer(2), Integer(3)));
}

TEST_CASE("binomial coefficients") {
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}
