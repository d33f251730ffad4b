#pragma once

// The acceptance battery: one result per criterion, tolerances fixed here.

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "arrcount/generators.hpp"

namespace arrcount::acceptance {

inline constexpr double kOracleSecondsLimit = 300.0;     // criterion 1
inline constexpr double kTheorem5SecondsLimit = 900.0;   // criterion 3
inline constexpr std::size_t kRandomArrangements = 200;  // criterion 1
inline constexpr std::size_t kRandomMaxN = 10;
inline constexpr std::size_t kCorpusMaxN = 12;
inline constexpr std::size_t kTheorem5FurtherValues = 12;  // beyond the four smallest counts
inline constexpr std::size_t kToricMaxN = 8;
inline constexpr std::size_t kToricMaxSlope = 5;
inline constexpr std::size_t kGridMaxRefinement = 8;
inline constexpr std::uint64_t kDefaultSeed = 20240917;

struct CriterionResult {
  std::string id;  // "1".."8", tiers as "3A", "3B", "3C"
  std::string name;
  bool passed = false;
  bool blocking = true;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  std::uint64_t seed = kDefaultSeed;
  bool parallel = true;
};

/// Every projective generator recipe with at most max_n hyperplanes, in a fixed order.
std::vector<generators::Projective> recipe_corpus(std::size_t max_n);

/// Runs all criteria in order; each line is also written to `log` when given.
std::vector<CriterionResult> run(const Options& options, std::ostream* log = nullptr);

std::string format(const CriterionResult& r);
bool all_blocking_passed(const std::vector<CriterionResult>& results);

}  // namespace arrcount::acceptance
