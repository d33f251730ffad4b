#pragma once

// Hyperplane arrangements in RP^d, handled through their central lift to
// R^{d+1}: intersection poset, Mobius function, characteristic polynomial and
// the Zaslavsky region count.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "arrcount/exactlin.hpp"
#include "arrcount/index_set.hpp"

namespace arrcount::projarr {

/// n hyperplanes of RP^d given by primitive integer covectors in Z^{d+1}.
class ProjArrangement {
 public:
  ProjArrangement() = default;

  /// Normalizes every covector and throws unless the result passes validate().
  static ProjArrangement make(std::size_t d, std::vector<IntVector> covectors);
  /// Normalizes every covector; duplicates and a common point are allowed.
  static ProjArrangement unchecked(std::size_t d, std::vector<IntVector> covectors);

  std::size_t d() const { return d_; }
  std::size_t ambient_dim() const { return d_ + 1; }
  std::size_t size() const { return covectors_.size(); }
  const std::vector<IntVector>& covectors() const { return covectors_; }
  const IntVector& operator[](std::size_t i) const { return covectors_[i]; }

  friend bool operator==(const ProjArrangement&, const ProjArrangement&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<IntVector> covectors_;
};

struct Violation {
  ErrorCode code;
  std::string detail;
};

/// Distinct covectors with full rank d+1, i.e. no point common to all hyperplanes.
std::optional<Violation> validate(const ProjArrangement& arr);

/// An intersection of hyperplanes in the central lift.
struct Flat {
  std::size_t subspace_dim = 0;
  std::vector<IntVector> basis;  // spans the linear subspace
  IndexSet incident;             // hyperplanes containing the subspace
  Integer mobius = 0;            // mu(ambient, this flat)

  std::size_t multiplicity() const { return incident.count(); }
};

/// All flats, ordered by decreasing subspace dimension; flats[0] is the ambient space.
struct IntersectionPoset {
  std::size_t ambient_dim = 0;
  std::size_t hyperplane_count = 0;
  std::vector<Flat> flats;

  const Flat& bottom() const { return flats.front(); }
  std::optional<std::size_t> find(const IndexSet& incident) const;
  /// Sizes grouped by rank (codimension) 0, 1, 2, ...
  std::vector<std::size_t> rank_sizes() const;
};

IntersectionPoset build_intersection_poset(const ProjArrangement& arr);

/// Integer polynomial; coeffs[k] multiplies t^k.
struct CharPoly {
  std::vector<Integer> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  Integer operator()(const Integer& t) const;
  friend bool operator==(const CharPoly&, const CharPoly&) = default;
};

CharPoly characteristic_polynomial(const IntersectionPoset& poset);

/// Number of open d-cells of RP^d, |chi(-1)| / 2.
Integer count_regions_projective(const IntersectionPoset& poset);
Integer count_regions_projective(const ProjArrangement& arr);

struct MultiplicityReport {
  std::size_t m = 0;
  Flat witness;
};

/// Largest number of hyperplanes through one projective point.
MultiplicityReport max_point_multiplicity(const IntersectionPoset& poset);
MultiplicityReport max_point_multiplicity(const ProjArrangement& arr);

/// Induced arrangement on a flat of subspace dimension >= 2, expressed in the
/// coordinates of the flat's basis. Traces of incident hyperplanes are dropped
/// and equal traces are merged.
ProjArrangement restrict_to_flat(const ProjArrangement& arr, const Flat& flat);

}  // namespace arrcount::projarr
