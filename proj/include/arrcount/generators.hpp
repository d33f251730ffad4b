#pragma once

// Constructive arrangement families with closed-form region counts where
// one is known. Every builder is deterministic and returns the arrangement
// together with a recipe that rebuilds it.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrcount/exactlin.hpp"
#include "arrcount/projarr.hpp"
#include "arrcount/toric.hpp"

namespace arrcount::generators {

struct Recipe {
  std::string family;
  std::vector<std::pair<std::string, std::string>> params;  // ordered
  std::vector<Recipe> inputs;
  std::optional<Integer> expected_f;

  /// Empty string when absent.
  std::string param(const std::string& key) const;
  /// e.g. cone[extras=1,placement=generic](near_pencil[n=10])
  std::string str() const;

  friend bool operator==(const Recipe&, const Recipe&) = default;
};

struct Projective {
  projarr::ProjArrangement arrangement;
  Recipe recipe;
};

struct Toric {
  toric::ToricArrangement arrangement;
  Recipe recipe;
};

/// Moment curve (1, t, ..., t^d), t = 1..n. f = sum_{i<=d} C(n-1, i).
Projective general_position(std::size_t n, std::size_t d);

/// n-1 lines through (0:0:1) and one line off it. f = 2n-2.
Projective near_pencil(std::size_t n);

/// n-k lines through P = (0:0:1) and the k lines (1, t, t^2), t = 1..k. j of
/// the pencil lines pass through intersection points of the k lines.
/// f = (n-k)(k+1) + C(k,2) - j.
Projective pencil_plus(std::size_t n, std::size_t k, std::size_t j);

/// a lines through P = (0:0:1), b lines through P' = (0:1:0). With the common
/// line PP' counted once n = a+b-1 and f = ab, otherwise n = a+b and f = ab+a+b-1.
Projective double_pencil(std::size_t a, std::size_t b, bool with_common_line);

enum class Placement { Generic, CommonFlat };

/// Base hyperplanes lifted through the apex (0:...:0:1) plus `extras` hyperplanes
/// off the apex. Generic: extras on a moment curve with large prime parameters.
/// CommonFlat: extras (alpha * u, 1), alpha = 0..extras-1, where u is base
/// hyperplane `line`; f = (extras+1) f(base). One extra always gives 2 f(base).
Projective cone(const Projective& base, std::size_t extras, Placement placement = Placement::Generic,
                std::size_t line = 0);

/// Cone over `base` with extras (v_j, 1). The result is validated.
Projective apex_extras(const Projective& base, const std::vector<IntVector>& v);

/// d = 3: cone over an n-2 line base plus the planes x_3 = 0 and (l, 1) = 0,
/// meeting in a line over l. f = 3 f(base) + k, where k counts the distinct
/// points cut on l by the base (k = 0 when l is a base line).
Projective two_extra_planes_line(const Projective& base, const IntVector& l, const std::string& label);

/// Picks l automatically: with in_union l is base line 0; otherwise l passes
/// through a base point on exactly trace_coincidences + 1 lines (none for 0)
/// and a generic second point. Throws PlacementUnavailable when no point fits.
Projective two_extra_planes(std::size_t n, const Projective& base, std::size_t trace_coincidences,
                            bool in_union = false);

/// Distinct intersection points of the line l with the lines of a d = 2
/// arrangement not containing l, as primitive homogeneous coordinates.
std::vector<IntVector> trace_points(const projarr::ProjArrangement& base, const IntVector& l);

/// Intersection points of a d = 2 arrangement with the number of lines through each.
std::vector<std::pair<IntVector, std::size_t>> intersection_points(const projarr::ProjArrangement& base);

/// A point of RP^2 off every line of `base` and off every line through two of
/// its intersection points; `salt` selects among such points.
IntVector generic_point(const projarr::ProjArrangement& base, std::size_t salt = 0);

/// k coordinate subtori x_i = 0 (i < k) and n-k parallel subtori x_k = c_j.
/// f = n-k. Default offsets c_j = j/(n-k+1).
Toric toric_construction_a(std::size_t n, std::size_t d, std::size_t k, std::vector<Rational> offsets = {});

/// x_i = 0 for 2 <= i <= d, x_2 = k x_1 + 1/2 and x_1 = c_j for n-d offsets.
/// f = 2n-2d+k. Default offsets c_j = (2j-1)/(2(n-d)+1).
Toric toric_construction_b(std::size_t n, std::size_t d, std::size_t slope, std::vector<Rational> offsets = {});

/// n <= d: x_2 = 0, x_2 = k x_1 + 1/2 and x_i = 0 for 3 <= i <= n. f = k for k >= 1.
Toric toric_slope_pair(std::size_t n, std::size_t d, std::size_t slope);

/// Explicit toric arrangement; no expected count.
Toric toric_explicit(std::size_t d, const std::vector<toric::Subtorus>& subtori, const std::string& label);

/// Rebuilds an arrangement from its recipe.
Projective realize_projective(const Recipe& recipe);
Toric realize_toric(const Recipe& recipe);

bool is_toric_family(const std::string& family);

}  // namespace arrcount::generators
