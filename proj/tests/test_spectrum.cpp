#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "arrcount/bounds.hpp"
#include "arrcount/generators.hpp"
#include "arrcount/spectrum.hpp"
#include "arrcount/toric.hpp"

using namespace arrcount;
using namespace arrcount::spectrum;

namespace {

bool found_all(const SpectrumReport& r, const std::vector<Integer>& values) {
  return std::all_of(values.begin(), values.end(), [&](const Integer& f) { return r.found.contains(f); });
}

std::vector<Integer> range(long lo, long hi) {
  std::vector<Integer> out;
  for (long f = lo; f <= hi; ++f) out.emplace_back(f);
  return out;
}

void check_witnesses(const SpectrumReport& r) {
  for (const auto& [f, recipe] : r.found) {
    const Integer again = generators::is_toric_family(recipe.family)
                              ? toric::count_regions_toric(generators::realize_toric(recipe).arrangement)
                              : projarr::count_regions_projective(generators::realize_projective(recipe).arrangement);
    CHECK_MESSAGE(again == f, recipe.str());
  }
}

}  // namespace

TEST_CASE("membership rules and caps") {
  CHECK(membership_rule(Space::Projective, 10, 2) == "martinov");
  CHECK(membership_rule(Space::Projective, 50, 3) == "theorem5");
  CHECK(membership_rule(Space::Projective, 11, 3) == "theorem4");
  CHECK(membership_rule(Space::Projective, 8, 3) == "lower_bound");
  CHECK(membership_rule(Space::Toric, 4, 2) == "toric");
  CHECK(default_cap(Space::Projective, 11, 3) == 56);
  CHECK(default_cap(Space::Projective, 50, 3) == 540);
  CHECK(default_cap(Space::Projective, 10, 2) == 28);
}

TEST_CASE("projective search, d=3, n=11") {
  const auto r = search_projective(11, 3);
  CHECK(r.cap == 56);
  CHECK(found_all(r, {36, 48, 50, 56}));
  CHECK(r.unexpected.empty());
  CHECK(r.missing_predicted.empty());
  CHECK_FALSE(r.partial);
  check_witnesses(r);
}

TEST_CASE("projective search, d=2, n=10") {
  const auto r = search_projective(10, 2);
  CHECK(r.cap == 28);
  CHECK(found_all(r, {18, 24, 25, 28}));
  CHECK(r.unexpected.empty());
  check_witnesses(r);
}

TEST_CASE("line arrangements below 4n-12 stay in the small set") {
  for (std::size_t n = 7; n <= 9; ++n) {
    const auto r = search_projective(n, 2);
    const auto allowed = bounds::martinov_subset(n);
    for (const auto& [f, recipe] : r.found) {
      if (f <= Integer(4 * static_cast<long>(n) - 12)) CHECK_MESSAGE(allowed.contains(f), recipe.str());
    }
  }
}

TEST_CASE("toric searches") {
  SearchOptions cap12;
  cap12.cap = Integer(12);
  const auto a = search_toric(4, 2, cap12);
  CHECK(found_all(a, range(3, 12)));
  CHECK(a.unexpected.empty());
  CHECK(a.missing_predicted.empty());
  check_witnesses(a);

  SearchOptions cap10;
  cap10.cap = Integer(10);
  cap10.budget = 64;
  const auto b = search_toric(5, 3, cap10);
  CHECK(found_all(b, range(3, 10)));
  CHECK(b.unexpected.empty());

  SearchOptions cap6;
  cap6.cap = Integer(6);
  const auto c = search_toric(3, 3, cap6);
  CHECK(found_all(c, range(1, 6)));
}

TEST_CASE("a larger budget never loses a found value") {
  std::map<Integer, generators::Recipe> previous;
  for (std::size_t budget : {1, 2, 4, 8, 64, 4096}) {
    SearchOptions opt;
    opt.budget = budget;
    const auto r = search_projective(12, 3, opt);
    CHECK(r.counted <= budget);
    for (const auto& [f, recipe] : previous) CHECK(r.found.contains(f));
    previous = r.found;
  }
}

TEST_CASE("serial and parallel searches agree") {
  SearchOptions serial, parallel;
  serial.parallel = false;
  parallel.parallel = true;
  for (std::size_t n : {11, 13}) {
    const auto a = search_projective(n, 3, serial), b = search_projective(n, 3, parallel);
    CHECK(a.found == b.found);
    CHECK(a.counted == b.counted);
  }
  const auto a = search_projective(13, 4, serial), b = search_projective(13, 4, parallel);
  CHECK(a.found == b.found);
  const auto c = search_toric(5, 2, serial), d = search_toric(5, 2, parallel);
  CHECK(c.found == d.found);
}

TEST_CASE("bound verification") {
  std::vector<ProjectiveSample> samples;
  for (const auto& arr : random_arrangements(200, 1, 10)) samples.push_back({"random", arr, projarr::count_regions_projective(arr)});
  CHECK(verify_bounds_batch(samples).empty());

  for (std::size_t n = 5; n <= 12; ++n) {
    const auto p = generators::general_position(n, 3);
    CHECK(check_bounds(ProjectiveSample{p.recipe.str(), p.arrangement, projarr::count_regions_projective(p.arrangement)}).empty());
  }

  // A count pushed below a tight bound is reported.
  const auto np = generators::near_pencil(8);
  const ProjectiveSample corrupted{"corrupted", np.arrangement, projarr::count_regions_projective(np.arrangement) - 1};
  CHECK_FALSE(check_bounds(corrupted).empty());

  const auto t = generators::toric_construction_a(6, 3, 2);
  CHECK(check_bounds(ToricSample{"a", t.arrangement, 4}).empty());
  CHECK(check_bounds(ToricSample{"a", t.arrangement, 3}).size() == 1);
}

TEST_CASE("random stream is deterministic and valid") {
  const auto a = random_arrangements(50, 42, 10), b = random_arrangements(50, 42, 10);
  CHECK(a == b);
  for (const auto& arr : a) {
    CHECK_FALSE(projarr::validate(arr));
    CHECK(arr.size() <= 10);
    CHECK(arr.d() >= 2);
    CHECK(arr.d() <= 4);
  }
}

TEST_CASE("apex prediction") {
  const auto base = generators::near_pencil(7);
  const std::vector<IntVector> v{IntVector{0, 0, 0}, IntVector{1, 3, 7}};
  const auto p = generators::apex_extras(base, v);
  CHECK(predict_apex_count(base.arrangement, v) == projarr::count_regions_projective(p.arrangement));
}
