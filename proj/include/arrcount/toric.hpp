#pragma once

// Region counting for arrangements of codimension-one subtori in the flat
// torus T^d = R^d / Z^d.

#include <cstddef>
#include <vector>

#include "arrcount/exactlin.hpp"
#include "arrcount/signoracle.hpp"

namespace arrcount::toric {

inline constexpr std::size_t kMaxTorusDim = 4;
inline constexpr std::size_t kMaxLiftedHyperplanes = 24;

/// Image of {x : a·x = c} in T^d. Canonical form: a primitive with first
/// nonzero entry positive, c in [0, 1).
class Subtorus {
 public:
  Subtorus() = default;
  /// Accepts any nonzero integer normal; a common factor g is divided out of
  /// both a and c, so the image of the single hyperplane is kept.
  static Subtorus make(const IntVector& normal, const Rational& offset);

  const IntVector& normal() const { return normal_; }
  const Rational& offset() const { return offset_; }
  std::size_t dim() const { return normal_.dim(); }

  friend bool operator==(const Subtorus&, const Subtorus&) = default;
  friend bool operator<(const Subtorus& a, const Subtorus& b) {
    return a.normal_ < b.normal_ || (a.normal_ == b.normal_ && a.offset_ < b.offset_);
  }

 private:
  IntVector normal_;
  Rational offset_;
};

class ToricArrangement {
 public:
  ToricArrangement() = default;
  /// Throws DuplicateSubtorus when two entries coincide after canonicalization.
  static ToricArrangement make(std::size_t d, std::vector<Subtorus> subtori);

  std::size_t d() const { return d_; }
  std::size_t size() const { return subtori_.size(); }
  const std::vector<Subtorus>& subtori() const { return subtori_; }

  friend bool operator==(const ToricArrangement&, const ToricArrangement&) = default;

 private:
  std::size_t d_ = 0;
  std::vector<Subtorus> subtori_;
};

/// a·x = offset in R^d.
struct AffineHyperplane {
  IntVector normal;
  Rational offset;
  std::size_t source = 0;  // index of the subtorus it lifts
};

/// Every integer translate a·x = c + t meeting the closed unit cube.
std::vector<AffineHyperplane> lift_to_cube(const ToricArrangement& arr);

struct TorusRegionDecomposition {
  std::vector<AffineHyperplane> lifted;
  std::vector<signoracle::Cell> cells;  // witnesses are homogeneous (x_1..x_d, x_0)
  std::vector<std::size_t> cell_class;  // class label per cell, 0-based and dense
  std::size_t facet_cells = 0;          // facet cells used for gluing
  Integer f;
};

/// Open cells of the cube, glued across opposite facets with union-find.
TorusRegionDecomposition decompose(const ToricArrangement& arr);
Integer count_regions_toric(const ToricArrangement& arr);

/// Grid heuristic: components of off-subtorus samples at pitch 1/(R*Q), Q the
/// lcm of the offset denominators times the largest normal entry. Neighbouring samples are joined only along
/// segments that cross no subtorus, so a count can fall short (a region without
/// samples, or a split one) but never merges regions.
/// Counts at R and 2R must agree, otherwise throws Unstable.
Integer count_regions_toric_grid(const ToricArrangement& arr, std::size_t refinement);

struct GridResult {
  Integer f;
  std::size_t refinement = 0;
};

/// Doubles the refinement from `start` until two successive counts agree.
GridResult count_regions_toric_grid_stable(const ToricArrangement& arr, std::size_t start = 1,
                                           std::size_t max_refinement = 16);

/// Component count at one fixed refinement, no stability check.
Integer grid_components(const ToricArrangement& arr, std::size_t refinement);

}  // namespace arrcount::toric
