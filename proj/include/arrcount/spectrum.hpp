#pragma once

// Recipe-driven search for realizable region counts, compared against the
// predicted spectra, plus batch verification of the lower bounds.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arrcount/bounds.hpp"
#include "arrcount/generators.hpp"

namespace arrcount::spectrum {

enum class Space { Projective, Toric };

std::string space_name(Space s);

struct Context {
  std::size_t n = 0;
  std::size_t d = 0;
  Space space = Space::Projective;
};

struct SpectrumReport {
  Context context;
  std::map<Integer, generators::Recipe> found;  // first witness per f in recipe order
  std::string rule;                             // membership rule id
  Integer cap;
  std::vector<Integer> predicted;  // predicted values <= cap
  std::vector<Integer> missing_predicted;
  std::vector<Integer> unexpected;
  bool partial = false;
  std::size_t candidates = 0;  // recipes considered
  std::size_t counted = 0;     // exact counts performed
};

struct SearchOptions {
  /// Upper limit on exact counts; the candidate stream is fixed, so a larger
  /// budget only extends the evaluated prefix.
  std::size_t budget = 4096;
  std::optional<Integer> cap;  // defaults to default_cap
  bool parallel = true;
};

/// Rule ids: "martinov" (d = 2, n >= 7), "theorem5" (d = 3, n >= 50),
/// "theorem4" (d >= 3, n >= 2d+5), "lower_bound" otherwise, "toric".
std::string membership_rule(Space space, std::size_t n, std::size_t d);
Integer default_cap(Space space, std::size_t n, std::size_t d);
/// Whether f (<= the rule's cap) is allowed by the rule.
bool predicted_member(const std::string& rule, std::size_t n, std::size_t d, const Integer& f);
/// Predicted values up to cap; empty for "lower_bound".
std::vector<Integer> predicted_values(const std::string& rule, std::size_t n, std::size_t d, const Integer& cap);

SpectrumReport search_projective(std::size_t n, std::size_t d, const SearchOptions& options = {});
SpectrumReport search_toric(std::size_t n, std::size_t d, const SearchOptions& options = {});

/// Region count of a d = 3 cone over `base` (d = 2) with extras (v_j, 1),
/// from counts of plane arrangements: f(base) + sum_j f(base + {v_i - v_j : i < j}).
Integer predict_apex_count(const projarr::ProjArrangement& base, const std::vector<IntVector>& v);

struct BoundViolation {
  std::string arrangement;
  std::string bound;
  Rational value;
  Integer ceil;
  Integer f;
};

struct ProjectiveSample {
  std::string label;
  projarr::ProjArrangement arrangement;
  Integer f;
};

struct ToricSample {
  std::string label;
  toric::ToricArrangement arrangement;
  Integer f;
};

/// Homological, multiplicity-sum (ceiling), multiplicity-product and quadratic bounds with m the
/// maximal point multiplicity; homological only for toric samples.
std::vector<BoundViolation> check_bounds(const ProjectiveSample& s);
std::vector<BoundViolation> check_bounds(const ToricSample& s);
std::vector<BoundViolation> verify_bounds_batch(const std::vector<ProjectiveSample>& projective,
                                                const std::vector<ToricSample>& toric = {});

/// Deterministic stream of valid arrangements with entries in [-2, 2],
/// d in {2, 3, 4} and d+1 <= n <= max_n.
std::vector<projarr::ProjArrangement> random_arrangements(std::size_t count, std::uint64_t seed,
                                                           std::size_t max_n = 10);

}  // namespace arrcount::spectrum
