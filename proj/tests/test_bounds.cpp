#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <gmpxx.h>

#include <algorithm>

#include "arrcount/bounds.hpp"

using namespace arrcount;
using namespace arrcount::bounds;

namespace {

mpz_class choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Direct evaluations written independently of the library formulas.
mpq_class naive_sum_bound(long n, long d, long m) {
  mpq_class s = 0;
  for (long j = 0; 2 * j <= d; ++j) s += mpq_class(choose(n, d - 2 * j), choose(m - 2 * j, d - 2 * j));
  s.canonicalize();
  return s * (m - d + 1);
}

mpq_class naive_product_bound(long n, long d, long m) { return mpq_class((n - m + 1) * (m - d + 2)) * (mpz_class(1) << (d - 2)); }

mpq_class naive_quadratic_bound(long n, long d, long m) {
  mpq_class q(2 * (n * n - n), m - d + 5);
  q.canonicalize();
  return q;
}

Rational R(long p, long q = 1) { return Rational(Integer(p), Integer(q)); }

}  // namespace

TEST_CASE("homology ranks") {
  CHECK(h_dim(ManifoldDescriptor::torus(3)) == 3);
  CHECK(h_dim(ManifoldDescriptor::sphere(4)) == 0);
  CHECK(h_dim(ManifoldDescriptor::orientable_surface(2)) == 4);
  CHECK(h_dim(ManifoldDescriptor::projective_space(3)) == 1);
}

TEST_CASE("homological bound") {
  CHECK(bound_homological(7, ManifoldDescriptor::projective_space(3)).ceil == 7);
  CHECK(bound_homological(7, ManifoldDescriptor::torus(3)).ceil == 5);
  CHECK(bound_homological(7, ManifoldDescriptor::sphere(3)).ceil == 8);
}

TEST_CASE("multiplicity sum bound") {
  CHECK(bound_lemma3(11, 3, 4).value == R(187, 2));
  CHECK(bound_lemma3(11, 3, 4).ceil == 94);
  CHECK(bound_lemma3(5, 2, 3).value == R(26, 3));
  CHECK(bound_lemma3(5, 2, 3).ceil == 9);
  for (long n = 11; n <= 30; ++n) CHECK(bound_lemma3(n, 3, 4).value >= Rational(mpq_class(choose(n, 4), n - 3)));
}

TEST_CASE("multiplicity product bound") {
  CHECK(bound_lemma4(11, 3, 5).value == 56);
  CHECK(bound_lemma4(11, 3, 8).value == 56);
  CHECK(bound_lemma4(13, 4, 6).value == 128);
}

TEST_CASE("minimum over all arrangements") {
  CHECK(bound_mcmullen(11, 3).value == 36);
  for (long d = 1; d <= 6; ++d) CHECK(bound_mcmullen(d + 1, d).value == Rational(Integer(Integer(1) << d)));
  CHECK(bound_mcmullen(50, 3).value == 192);
}

TEST_CASE("quadratic bound") {
  CHECK(bound_lemma6(50, 3, 7).value == R(4900, 9));
  CHECK(bound_lemma6(50, 3, 7).ceil == 545);
  CHECK(bound_lemma6(50, 3, 7).value >= 540);
  CHECK(bound_lemma6(50, 3, 50).value == R(4900, 52));
  CHECK(bound_lemma6(50, 3, 50).ceil == 95);
}

TEST_CASE("bounds agree with direct evaluation over a parameter sweep") {
  for (long d = 1; d <= 5; ++d) {
    for (long n = d + 1; n <= 25; ++n) {
      for (long m = d; m <= n; ++m) {
        CHECK(bound_lemma3(n, d, m).value == Rational(naive_sum_bound(n, d, m)));
        if (d >= 2) CHECK(bound_lemma4(n, d, m).value == Rational(naive_product_bound(n, d, m)));
        CHECK(bound_lemma6(n, d, m).value == Rational(naive_quadratic_bound(n, d, m)));
      }
    }
  }
}

TEST_CASE("four smallest counts in dimension at least 3") {
  CHECK(spectrum_theorem4(11, 3).values == std::vector<Integer>{36, 48, 50, 56});
  CHECK(spectrum_theorem4(13, 4).values == std::vector<Integer>{80, 108, 112, 126});
  CHECK(spectrum_theorem4(11, 3).threshold == 56);
  CHECK_THROWS_AS(spectrum_theorem4(10, 3), Error);
  for (std::size_t d = 3; d <= 7; ++d) {
    for (std::size_t n = 2 * d + 5; n <= 40; ++n) {
      const auto s = spectrum_theorem4(n, d);
      CHECK(s.values[0] == bound_mcmullen(n, d).value.num());
      for (std::size_t i = 1; i < 4; ++i) CHECK(s.values[i] > bound_mcmullen(n, d).value.num());
    }
  }
}

TEST_CASE("listed d=3 counts") {
  const auto v = spectrum_theorem5(50);
  REQUIRE(v.size() == 36);
  CHECK(v.front() == 192);
  CHECK(v[3] == 329);
  CHECK(v.back() == 540);
  CHECK(std::find(v.begin(), v.end(), 450) != v.end());
  CHECK(std::find(v.begin(), v.end(), 506) != v.end());
  for (std::size_t n = 50; n <= 120; ++n) {
    const auto w = spectrum_theorem5(n);
    CHECK(std::adjacent_find(w.begin(), w.end(), [](const Integer& a, const Integer& b) { return !(a < b); }) == w.end());
    CHECK(w.back() == Integer(12 * static_cast<long>(n) - 60));
  }
  CHECK_THROWS_AS(spectrum_theorem5(49), Error);
}

TEST_CASE("small line-arrangement counts in both indexings") {
  CHECK(martinov_subset(10) == std::set<Integer>{18, 24, 25, 28});
  CHECK(martinov_subset_quoted(10) == std::set<Integer>{16, 21, 22, 24});
  for (std::size_t n = 8; n <= 30; ++n) CHECK(martinov_subset(n - 1) == martinov_subset_quoted(n));
}

TEST_CASE("toric membership") {
  CHECK(toric_spectrum_membership(4, 2, 3));
  CHECK_FALSE(toric_spectrum_membership(4, 2, 2));
  for (long f = 1; f <= 20; ++f) CHECK(toric_spectrum_membership(3, 3, f));
  CHECK(toric_spectrum_membership(7, 3, 5));
  CHECK_FALSE(toric_spectrum_membership(7, 3, 4));
  CHECK(toric_predicted(4, 2, 8) == std::vector<Integer>{3, 4, 5, 6, 7, 8});
}
