#pragma once

// Closed-form lower bounds on region counts and the predicted spectra.

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "arrcount/exactlin.hpp"

namespace arrcount::bounds {

enum class ManifoldKind { Sphere, ProjectiveSpace, Torus, OrientableSurface, KleinBottle };
enum class CoefficientGroup { Z, Z2 };

struct ManifoldDescriptor {
  ManifoldKind kind = ManifoldKind::Sphere;
  std::size_t dim = 2;
  std::size_t genus = 0;  // OrientableSurface only
  CoefficientGroup group = CoefficientGroup::Z;

  static ManifoldDescriptor sphere(std::size_t d);
  /// RP^d with hyperplane submanifolds; one of M or RP^{d-1} is non-orientable, so G = Z2.
  static ManifoldDescriptor projective_space(std::size_t d);
  static ManifoldDescriptor torus(std::size_t d);
  static ManifoldDescriptor orientable_surface(std::size_t g);
  static ManifoldDescriptor klein_bottle();

  std::string name() const;
};

/// A bound as an exact rational together with its ceiling; region counts are
/// compared against the ceiling.
struct BoundValue {
  Rational value;
  Integer ceil;

  static BoundValue of(const Rational& v) { return BoundValue{v, v.ceil()}; }
};

/// dim H_{d-1}(M, G).
std::size_t h_dim(const ManifoldDescriptor& m);

/// k + 1 - dim H_{d-1}(M, G) for k transversal codimension-one submanifolds.
BoundValue bound_homological(std::size_t k, const ManifoldDescriptor& m);

/// (m-d+1) * sum_{j=0}^{floor(d/2)} C(n, d-2j) / C(m-2j, d-2j).
BoundValue bound_lemma3(std::size_t n, std::size_t d, std::size_t m);

/// (n-m+1)(m-d+2) 2^{d-2}.
BoundValue bound_lemma4(std::size_t n, std::size_t d, std::size_t m);

/// (n-d+1) 2^{d-1}: the McMullen/Shannon minimum in ambient dimension d.
BoundValue bound_mcmullen(std::size_t n, std::size_t d);

/// 2 (n^2 - n) / (m - d + 5).
BoundValue bound_lemma6(std::size_t n, std::size_t d, std::size_t m);

struct Theorem4Spectrum {
  std::vector<Integer> values;  // strictly increasing, four entries
  Integer threshold;            // the last value
};

/// The four smallest members of F_n^(d) for d >= 3, n >= 2d+5.
Theorem4Spectrum spectrum_theorem4(std::size_t n, std::size_t d);

/// Linear form slope*n - offset.
struct LinearForm {
  long slope;
  long offset;

  Integer at(std::size_t n) const { return Integer(slope) * static_cast<unsigned long>(n) - offset; }
  std::string str() const { return std::to_string(slope) + "n-" + std::to_string(offset); }
};

/// The 36 forms of the d = 3 spectrum below 12n - 60, in listed order.
const std::vector<LinearForm>& theorem5_forms();

/// Sorted values of theorem5_forms() at n >= 50.
std::vector<Integer> spectrum_theorem5(std::size_t n);

/// {2n-2, 3n-6, 3n-5, 4n-12}: the members of F_n^(2) up to 4n-12 (n >= 7).
std::set<Integer> martinov_subset(std::size_t n);
/// The same set written for n-1 lines: {2n-4, 3n-9, 3n-8, 4n-16}.
std::set<Integer> martinov_subset_quoted(std::size_t n);

/// Membership in {n-d+1, ..., n} ∪ {l >= 2(n-d)} for n > d; every f >= 1 when n <= d.
bool toric_spectrum_membership(std::size_t n, std::size_t d, const Integer& f);

/// Predicted toric values in [1, cap].
std::vector<Integer> toric_predicted(std::size_t n, std::size_t d, const Integer& cap);

}  // namespace arrcount::bounds
