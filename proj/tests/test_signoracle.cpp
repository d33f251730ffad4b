#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "arrcount/generators.hpp"
#include "arrcount/signoracle.hpp"
#include "arrcount/spectrum.hpp"

using namespace arrcount;
using projarr::ProjArrangement;
using signoracle::SignVector;

namespace {

ProjArrangement triangle() { return ProjArrangement::make(2, {IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1}}); }

SignVector signs_of(std::uint64_t mask, std::size_t n) {
  SignVector s(n);
  for (std::size_t i = 0; i < n; ++i) s[i] = (mask >> i & 1) ? -1 : 1;
  return s;
}

SignVector negated(SignVector s) {
  for (auto& x : s) x = static_cast<std::int8_t>(-x);
  return s;
}

}  // namespace

TEST_CASE("feasibility examples") {
  CHECK(signoracle::sign_vector_feasible(triangle(), SignVector{1, 1, 1}));
  const std::vector<IntVector> opposite{IntVector{1, 2, 3}, IntVector{-1, -2, -3}};
  CHECK_FALSE(signoracle::sign_vector_feasible(opposite, SignVector{1, 1}));

  const auto gp = generators::general_position(4, 2).arrangement;
  std::size_t feasible = 0;
  for (std::uint64_t mask = 0; mask < 16; ++mask) feasible += signoracle::sign_vector_feasible(gp, signs_of(mask, 4));
  CHECK(feasible == 14);
}

TEST_CASE("interior points satisfy their sign vectors") {
  const auto arr = generators::near_pencil(6).arrangement;
  for (const auto& cell : signoracle::enumerate_cells_serial({}, arr.covectors(), 3)) {
    for (std::size_t i = 0; i < arr.size(); ++i) CHECK(sgn(dot(arr[i], cell.witness)) == cell.signs[i]);
  }
}

TEST_CASE("oracle counts") {
  CHECK(signoracle::count_regions_oracle(triangle()) == 4);
  CHECK(signoracle::count_regions_oracle(generators::general_position(4, 3).arrangement) == 8);
  CHECK(signoracle::count_regions_oracle(generators::near_pencil(5).arrangement) == 8);
}

TEST_CASE("antipodal symmetry and even totals") {
  for (const auto& arr : spectrum::random_arrangements(25, 5, 7)) {
    const std::size_t n = arr.size();
    std::size_t total = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const SignVector s = signs_of(mask, n);
      const bool f = signoracle::sign_vector_feasible(arr, s);
      CHECK(f == signoracle::sign_vector_feasible(arr, negated(s)));
      total += f;
    }
    CHECK(total % 2 == 0);
    CHECK(total == signoracle::feasible_sign_vectors(arr).size());
  }
}

TEST_CASE("parallel enumeration reproduces the serial reference exactly") {
  for (const auto& arr : spectrum::random_arrangements(30, 17, 10)) {
    const auto serial = signoracle::enumerate_cells_serial({}, arr.covectors(), arr.d() + 1);
    const auto parallel = signoracle::enumerate_cells({}, arr.covectors(), arr.d() + 1);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].signs == parallel[i].signs);
      CHECK(serial[i].witness == parallel[i].witness);
    }
    CHECK(signoracle::count_regions_oracle(arr) == signoracle::count_regions_oracle_serial(arr));
  }
}

TEST_CASE("size guard") {
  std::vector<IntVector> cs;
  for (long t = 1; t <= static_cast<long>(signoracle::kMaxOracleHyperplanes) + 1; ++t) cs.push_back(IntVector{1, t, t * t});
  CHECK_THROWS_AS(signoracle::count_regions_oracle(ProjArrangement::make(2, cs)), Error);
}
