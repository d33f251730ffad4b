#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "arrcount/generators.hpp"
#include "arrcount/projarr.hpp"
#include "arrcount/signoracle.hpp"
#include "arrcount/spectrum.hpp"
#include "oracles.hpp"

using namespace arrcount;
using projarr::ProjArrangement;

namespace {

ProjArrangement triangle() { return ProjArrangement::make(2, {IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1}}); }

std::vector<std::size_t> oracle_rank_sizes(const ProjArrangement& arr) {
  std::vector<std::size_t> out;
  for (const auto& [r, flats] : oracle::flats_by_rank(arr)) out.push_back(flats.size());
  return out;
}

std::vector<ProjArrangement> samples() {
  std::vector<ProjArrangement> out = spectrum::random_arrangements(60, 99, 9);
  for (std::size_t n = 4; n <= 8; ++n) {
    out.push_back(generators::near_pencil(n).arrangement);
    out.push_back(generators::general_position(n, 3).arrangement);
  }
  out.push_back(generators::double_pencil(3, 4, true).arrangement);
  out.push_back(generators::cone(generators::near_pencil(6), 2).arrangement);
  return out;
}

}  // namespace

TEST_CASE("validation examples") {
  CHECK_FALSE(projarr::validate(triangle()));
  const auto two = ProjArrangement::unchecked(2, {IntVector{1, 0, 0}, IntVector{0, 1, 0}});
  REQUIRE(projarr::validate(two));
  CHECK(projarr::validate(two)->code == ErrorCode::CommonPoint);
  const auto dup = ProjArrangement::unchecked(2, {IntVector{1, 0, 0}, IntVector{2, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1}});
  REQUIRE(projarr::validate(dup));
  CHECK(projarr::validate(dup)->code == ErrorCode::DuplicateHyperplane);
  CHECK_THROWS_AS(ProjArrangement::make(2, {IntVector{0, 0, 0}, IntVector{1, 0, 0}}), Error);
}

TEST_CASE("poset sizes match subset enumeration") {
  CHECK(projarr::build_intersection_poset(triangle()).rank_sizes() == std::vector<std::size_t>{1, 3, 3, 1});
  const auto gp4 = generators::general_position(4, 2).arrangement;
  CHECK(projarr::build_intersection_poset(gp4).rank_sizes() == std::vector<std::size_t>{1, 4, 6, 1});
  for (const auto& arr : samples()) {
    CHECK(projarr::build_intersection_poset(arr).rank_sizes() == oracle_rank_sizes(arr));
  }
}

TEST_CASE("characteristic polynomial examples") {
  const auto chi = projarr::characteristic_polynomial(projarr::build_intersection_poset(triangle()));
  CHECK(chi.coeffs == std::vector<Integer>{-1, 3, -3, 1});  // (t-1)^3
  const auto gp5 = projarr::characteristic_polynomial(
      projarr::build_intersection_poset(generators::general_position(5, 2).arrangement));
  CHECK(gp5.coeffs == std::vector<Integer>{-6, 10, -5, 1});
  const auto one = projarr::characteristic_polynomial(
      projarr::build_intersection_poset(ProjArrangement::unchecked(3, {IntVector{1, 0, 0, 0}})));
  CHECK(one.coeffs == std::vector<Integer>{0, 0, 0, -1, 1});
}

TEST_CASE("characteristic polynomial agrees with Whitney's subset formula and vanishes at 1") {
  for (const auto& arr : samples()) {
    const auto chi = projarr::characteristic_polynomial(projarr::build_intersection_poset(arr));
    CHECK(chi.coeffs == oracle::whitney_charpoly(arr));
    CHECK(chi(1) == 0);
  }
}

TEST_CASE("region count examples") {
  CHECK(projarr::count_regions_projective(triangle()) == 4);
  CHECK(projarr::count_regions_projective(generators::general_position(5, 2).arrangement) == 11);
  CHECK(projarr::count_regions_projective(generators::general_position(4, 3).arrangement) == 8);
}

TEST_CASE("region counts agree with subset enumeration and the sign oracle") {
  for (const auto& arr : samples()) {
    const Integer f = projarr::count_regions_projective(arr);
    CHECK(f == oracle::whitney_regions(arr));
    CHECK(f == signoracle::count_regions_oracle(arr));
  }
}

TEST_CASE("general position lines give 1 + n(n-1)/2 regions") {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<IntVector> cs;
    for (long t = 1; t <= static_cast<long>(n); ++t) cs.push_back(IntVector{1, t, t * t});
    if (n == 2) cs.push_back(IntVector{0, 0, 1});
    const auto arr = ProjArrangement::make(2, cs);
    const std::size_t k = cs.size();
    CHECK(projarr::count_regions_projective(arr) == 1 + k * (k - 1) / 2);
  }
}

TEST_CASE("deleting a hyperplane never increases the count") {
  for (const auto& arr : samples()) {
    const Integer f = projarr::count_regions_projective(arr);
    for (std::size_t i = 0; i < arr.size(); ++i) {
      std::vector<IntVector> rest;
      for (std::size_t j = 0; j < arr.size(); ++j) {
        if (j != i) rest.push_back(arr[j]);
      }
      const auto smaller = ProjArrangement::unchecked(arr.d(), rest);
      if (projarr::validate(smaller)) continue;
      CHECK(projarr::count_regions_projective(smaller) <= f);
    }
  }
}

TEST_CASE("point multiplicity") {
  CHECK(projarr::max_point_multiplicity(generators::general_position(6, 3).arrangement).m == 3);
  CHECK(projarr::max_point_multiplicity(triangle()).m == 2);
  const auto c = generators::cone(generators::near_pencil(9), 1).arrangement;
  CHECK(projarr::max_point_multiplicity(c).m == c.size() - 1);
  for (const auto& arr : samples()) {
    const std::size_t m = projarr::max_point_multiplicity(arr).m;
    CHECK(m == oracle::max_point_multiplicity(arr));
    CHECK(m >= arr.d());
    CHECK(m <= arr.size() - 1);
  }
}

TEST_CASE("poset is closed under intersection") {
  for (const auto& arr : samples()) {
    const auto poset = projarr::build_intersection_poset(arr);
    for (const auto& a : poset.flats) {
      for (const auto& b : poset.flats) {
        std::vector<IntVector> rows;
        for (std::size_t h = 0; h < arr.size(); ++h) {
          if (a.incident.test(h) || b.incident.test(h)) rows.push_back(arr[h]);
        }
        const std::size_t r = oracle::naive_rank(rows);
        IndexSet closure(arr.size());
        for (std::size_t h = 0; h < arr.size(); ++h) {
          auto with = rows;
          with.push_back(arr[h]);
          if (oracle::naive_rank(with) == r) closure.set(h);
        }
        CHECK(poset.find(closure).has_value());
      }
    }
  }
}

TEST_CASE("restriction to a flat") {
  const auto gp = generators::general_position(5, 3).arrangement;
  const auto poset = projarr::build_intersection_poset(gp);
  const auto& plane = poset.flats[1];
  REQUIRE(plane.subspace_dim == 3);
  const auto r = projarr::restrict_to_flat(gp, plane);
  CHECK(r.d() == 2);
  CHECK(r.size() == 4);
  CHECK(projarr::count_regions_projective(r) == 1 + 4 * 3 / 2);

  // Planes through a common line restrict to one point on a flat line meeting it.
  const auto c = generators::cone(generators::near_pencil(6), 1).arrangement;
  const auto cp = projarr::build_intersection_poset(c);
  for (const auto& flat : cp.flats) {
    if (flat.subspace_dim != 2) continue;
    const auto line = projarr::restrict_to_flat(c, flat);
    CHECK(line.d() == 1);
    CHECK(line.size() + flat.multiplicity() <= c.size());
  }
}
