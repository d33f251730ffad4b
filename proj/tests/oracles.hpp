#pragma once

// Brute-force reference computations kept independent of the library's
// elimination and poset code: plain rational Gaussian elimination and
// subset enumeration (Whitney's formula).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "arrcount/exactlin.hpp"
#include "arrcount/projarr.hpp"

namespace oracle {

inline std::size_t naive_rank(std::vector<std::vector<mpq_class>> m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const mpq_class f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t naive_rank(const std::vector<arrcount::IntVector>& rows) {
  std::vector<std::vector<mpq_class>> m;
  for (const auto& v : rows) {
    std::vector<mpq_class> row;
    for (const auto& x : v.entries()) row.emplace_back(x);
    m.push_back(std::move(row));
  }
  return naive_rank(std::move(m));
}

inline std::vector<arrcount::IntVector> pick(const arrcount::projarr::ProjArrangement& arr, std::uint64_t mask) {
  std::vector<arrcount::IntVector> rows;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (mask >> i & 1) rows.push_back(arr[i]);
  }
  return rows;
}

/// chi(t) = sum over subsets S of (-1)^|S| t^(l - rank S), l = d+1.
inline std::vector<arrcount::Integer> whitney_charpoly(const arrcount::projarr::ProjArrangement& arr) {
  const std::size_t l = arr.d() + 1;
  std::vector<arrcount::Integer> coeffs(l + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arr.size()); ++mask) {
    const std::size_t r = naive_rank(pick(arr, mask));
    coeffs[l - r] += (__builtin_popcountll(mask) % 2 == 0) ? 1 : -1;
  }
  return coeffs;
}

/// Regions of RP^d: half the regions of the central lift, sum_S (-1)^(|S| - rank S).
inline arrcount::Integer whitney_regions(const arrcount::projarr::ProjArrangement& arr) {
  arrcount::Integer total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arr.size()); ++mask) {
    const std::size_t r = naive_rank(pick(arr, mask));
    total += ((__builtin_popcountll(mask) - r) % 2 == 0) ? 1 : -1;
  }
  return total / 2;
}

/// Distinct flats as closed incidence masks, grouped by rank.
inline std::map<std::size_t, std::set<std::uint64_t>> flats_by_rank(const arrcount::projarr::ProjArrangement& arr) {
  std::map<std::size_t, std::set<std::uint64_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << arr.size()); ++mask) {
    const auto rows = pick(arr, mask);
    const std::size_t r = naive_rank(rows);
    std::uint64_t closure = 0;
    for (std::size_t h = 0; h < arr.size(); ++h) {
      auto with = rows;
      with.push_back(arr[h]);
      if (naive_rank(with) == r) closure |= std::uint64_t{1} << h;
    }
    out[r].insert(closure);
  }
  return out;
}

/// Largest number of hyperplanes through one projective point, from rank-d closures.
inline std::size_t max_point_multiplicity(const arrcount::projarr::ProjArrangement& arr) {
  std::size_t best = 0;
  const auto flats = flats_by_rank(arr);
  const auto points = flats.find(arr.d());
  if (points == flats.end()) return 0;
  for (auto mask : points->second) best = std::max<std::size_t>(best, __builtin_popcountll(mask));
  return best;
}

}  // namespace oracle
