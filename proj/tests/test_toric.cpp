#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "arrcount/bounds.hpp"
#include "arrcount/generators.hpp"
#include "arrcount/toric.hpp"

using namespace arrcount;
using toric::Subtorus;
using toric::ToricArrangement;

namespace {

Rational R(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

std::size_t translates(const ToricArrangement& arr) { return toric::lift_to_cube(arr).size(); }

// Random d = 2 arrangements with small normals and offsets in {0, 1/3, 1/2, 2/3}.
std::vector<ToricArrangement> random_plane_tori(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> e(-2, 2), off(0, 3), size(1, 4);
  const Rational offsets[] = {R(0), R(1, 3), R(1, 2), R(2, 3)};
  std::vector<ToricArrangement> out;
  while (out.size() < count) {
    std::vector<Subtorus> subs;
    const long n = size(rng);
    for (long i = 0; i < n; ++i) {
      IntVector a{e(rng), e(rng)};
      if (a.is_zero()) continue;
      subs.push_back(Subtorus::make(a, offsets[off(rng)]));
    }
    if (subs.empty()) continue;
    try {
      auto arr = ToricArrangement::make(2, subs);
      if (translates(arr) <= toric::kMaxLiftedHyperplanes) out.push_back(std::move(arr));
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("lifting to the cube") {
  CHECK(translates(ToricArrangement::make(2, {Subtorus::make(IntVector{1, 0}, R(1, 2))})) == 1);
  CHECK(translates(ToricArrangement::make(2, {Subtorus::make(IntVector{-1, 1}, R(1, 2))})) == 2);
  // Translates t = -2..2 of 3x - y = t all meet the closed square; t = 3 only at a corner.
  CHECK(translates(ToricArrangement::make(2, {Subtorus::make(IntVector{3, -1}, 0)})) == 5);
}

TEST_CASE("exact counter examples") {
  const auto axes = ToricArrangement::make(2, {Subtorus::make(IntVector{1, 0}, 0), Subtorus::make(IntVector{0, 1}, 0)});
  CHECK(toric::count_regions_toric(axes) == 1);
  CHECK(toric::count_regions_toric(generators::toric_construction_a(3, 2, 1).arrangement) == 2);
  CHECK(toric::count_regions_toric(generators::toric_construction_b(3, 2, 1).arrangement) == 3);
  const auto diag = ToricArrangement::make(2, {Subtorus::make(IntVector{1, -1}, 0)});
  CHECK(toric::count_regions_toric(diag) == 1);
  const auto two_diag = ToricArrangement::make(2, {Subtorus::make(IntVector{1, -1}, 0), Subtorus::make(IntVector{1, -1}, R(1, 2))});
  CHECK(toric::count_regions_toric(two_diag) == 2);
}

TEST_CASE("grid examples") {
  const auto axes = ToricArrangement::make(2, {Subtorus::make(IntVector{1, 0}, 0), Subtorus::make(IntVector{0, 1}, 0)});
  CHECK(toric::count_regions_toric_grid(axes, 2) == 1);
  const auto b = generators::toric_construction_b(4, 2, 3, {R(1, 7), R(2, 7)});
  CHECK(toric::count_regions_toric_grid_stable(b.arrangement).f == 7);
  CHECK(toric::count_regions_toric_grid_stable(generators::toric_construction_a(5, 3, 2).arrangement).f == 3);
}

TEST_CASE("constructions match their formulas for d in {2, 3}, n <= 8") {
  for (std::size_t d = 2; d <= 3; ++d) {
    for (std::size_t n = d; n <= 8; ++n) {
      for (std::size_t k = 0; k < d && k < n; ++k) {
        const auto t = generators::toric_construction_a(n, d, k);
        CHECK_MESSAGE(toric::count_regions_toric(t.arrangement) == Integer(static_cast<unsigned long>(n - k)), t.recipe.str());
      }
      if (n < d + 1) continue;
      for (std::size_t k = 0; k <= 5; ++k) {
        const auto t = generators::toric_construction_b(n, d, k);
        CHECK_MESSAGE(toric::count_regions_toric(t.arrangement) == Integer(static_cast<unsigned long>(2 * (n - d) + k)),
                      t.recipe.str());
      }
    }
  }
}

TEST_CASE("exact and grid counters agree") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t k = 0; k <= 5; ++k) {
      const auto t = generators::toric_construction_b(n, 2, k);
      CHECK_MESSAGE(toric::count_regions_toric(t.arrangement) == toric::count_regions_toric_grid_stable(t.arrangement, 1, 16).f,
                    t.recipe.str());
    }
  }
  // Random offsets and slopes leave regions far below the coarse pitch, where
  // R and 2R can agree on an undercount, so these are compared at a fixed
  // fine refinement.
  for (const auto& arr : random_plane_tori(80, 4)) {
    CHECK(toric::count_regions_toric(arr) == toric::count_regions_toric_grid(arr, 32));
  }
  for (std::size_t k = 0; k <= 2; ++k) {
    const auto t = generators::toric_construction_b(5, 3, k);
    CHECK(toric::count_regions_toric(t.arrangement) == toric::count_regions_toric_grid_stable(t.arrangement, 1, 4).f);
  }
}

TEST_CASE("counts respect the homological bound and the predicted set") {
  for (const auto& arr : random_plane_tori(80, 9)) {
    const Integer f = toric::count_regions_toric(arr);
    const std::size_t n = arr.size();
    CHECK(f >= bounds::bound_homological(n, bounds::ManifoldDescriptor::torus(2)).ceil);
    if (n >= 2) CHECK(bounds::toric_spectrum_membership(n, 2, f));
  }
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(Subtorus::make(IntVector{0, 0}, 0), Error);
  CHECK_THROWS_AS(ToricArrangement::make(2, {Subtorus::make(IntVector{1, 0}, 0), Subtorus::make(IntVector{2, 0}, 0)}), Error);
  CHECK(Subtorus::make(IntVector{-1, 0}, R(1, 3)).offset() == R(2, 3));
}
