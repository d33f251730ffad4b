#pragma once

// Brute-force region counting by sign-vector feasibility. Independent of the
// poset machinery in projarr; used as the verification oracle.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "arrcount/exactlin.hpp"
#include "arrcount/projarr.hpp"

namespace arrcount::signoracle {

using SignVector = std::vector<std::int8_t>;

inline constexpr std::size_t kMaxOracleHyperplanes = 24;

/// Returns y with r·y > 0 for every row (equivalently r·y >= 1 after scaling),
/// or nullopt when the open cone is empty. Exact phase-one simplex with
/// integer pivoting and Bland's rule on the dual hull-membership problem.
std::optional<IntVector> interior_point(std::span<const IntVector> rows, std::size_t dim);

/// True iff some x has sigma_i (u_i·x) > 0 for all i. Raw covectors are used as given.
bool sign_vector_feasible(std::span<const IntVector> covectors, const SignVector& sigma);
bool sign_vector_feasible(const projarr::ProjArrangement& arr, const SignVector& sigma);

/// One open cell: its sign vector over the enumerated hyperplanes and an
/// interior point y (strictly positive on all fixed rows and signed hyperplanes).
struct Cell {
  SignVector signs;
  IntVector witness;
};

/// Depth-first enumeration of all feasible sign vectors over `hyperplanes`,
/// subject to the always-positive `fixed` rows. Output is in lexicographic
/// order with + before -. A child inherits its parent's witness when the sign
/// agrees, so only the opposite branch needs an LP.
std::vector<Cell> enumerate_cells_serial(std::span<const IntVector> fixed, std::span<const IntVector> hyperplanes,
                                         std::size_t dim);

/// OpenMP version: prefixes are expanded breadth-first until there is enough
/// work, subtrees run in parallel, results are concatenated in prefix order.
/// Produces exactly the output of enumerate_cells_serial.
std::vector<Cell> enumerate_cells(std::span<const IntVector> fixed, std::span<const IntVector> hyperplanes,
                                  std::size_t dim);

/// Feasible sign vectors / 2. Throws TooLarge above kMaxOracleHyperplanes.
Integer count_regions_oracle(const projarr::ProjArrangement& arr);
Integer count_regions_oracle_serial(const projarr::ProjArrangement& arr);

/// All feasible sign vectors of the central lift (both antipodes).
std::vector<SignVector> feasible_sign_vectors(const projarr::ProjArrangement& arr);

}  // namespace arrcount::signoracle
