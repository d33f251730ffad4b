#include "arrcount/projarr.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_map>

namespace arrcount::projarr {

namespace {

std::vector<IntVector> normalized(std::size_t d, std::vector<IntVector> covectors) {
  for (auto& c : covectors) {
    if (c.dim() != d + 1)
      throw Error(ErrorCode::InvalidArgument, "covector " + c.str() + " has length != d+1");
    c = primitive_normalize(c);
  }
  return covectors;
}

// Basis of span(basis) ∩ {x : u·x = 0}, assuming u does not vanish on the span.
std::vector<IntVector> cut(const std::vector<IntVector>& basis, const IntVector& u) {
  std::vector<Integer> w(basis.size());
  std::size_t pivot = basis.size();
  for (std::size_t j = 0; j < basis.size(); ++j) {
    w[j] = dot(u, basis[j]);
    if (pivot == basis.size() && w[j] != 0) pivot = j;
  }
  std::vector<IntVector> out;
  out.reserve(basis.size() - 1);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (j == pivot) continue;
    IntVector v(basis[j].dim());
    for (std::size_t k = 0; k < v.dim(); ++k) v[k] = basis[j][k] * w[pivot] - basis[pivot][k] * w[j];
    out.push_back(primitive_normalize(v));
  }
  return out;
}

bool annihilates(const IntVector& u, const std::vector<IntVector>& basis) {
  return std::all_of(basis.begin(), basis.end(), [&](const IntVector& v) { return dot(u, v) == 0; });
}

}  // namespace

ProjArrangement ProjArrangement::make(std::size_t d, std::vector<IntVector> covectors) {
  ProjArrangement a = unchecked(d, std::move(covectors));
  if (auto v = validate(a)) throw Error(v->code, v->detail);
  return a;
}

ProjArrangement ProjArrangement::unchecked(std::size_t d, std::vector<IntVector> covectors) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "projective dimension must be >= 1");
  ProjArrangement a;
  a.d_ = d;
  a.covectors_ = normalized(d, std::move(covectors));
  return a;
}

std::optional<Violation> validate(const ProjArrangement& arr) {
  const auto& cs = arr.covectors();
  for (const auto& c : cs) {
    if (c.is_zero()) return Violation{ErrorCode::ZeroVector, "zero covector"};
    if (primitive_normalize(c) != c) return Violation{ErrorCode::InvalidArgument, "covector " + c.str() + " not canonical"};
  }
  std::vector<IntVector> sorted = cs;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) return Violation{ErrorCode::DuplicateHyperplane, "repeated covector " + sorted[i].str()};
  }
  const std::size_t r = rank(std::span<const IntVector>(cs), arr.ambient_dim());
  if (r < arr.ambient_dim()) {
    return Violation{ErrorCode::CommonPoint,
                     "covector rank " + std::to_string(r) + " < " + std::to_string(arr.ambient_dim())};
  }
  return std::nullopt;
}

std::optional<std::size_t> IntersectionPoset::find(const IndexSet& incident) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i].incident == incident) return i;
  return std::nullopt;
}

std::vector<std::size_t> IntersectionPoset::rank_sizes() const {
  std::vector<std::size_t> sizes;
  for (const auto& f : flats) {
    const std::size_t r = ambient_dim - f.subspace_dim;
    if (sizes.size() <= r) sizes.resize(r + 1, 0);
    ++sizes[r];
  }
  return sizes;
}

IntersectionPoset build_intersection_poset(const ProjArrangement& arr) {
  const std::size_t dim = arr.ambient_dim();
  const std::size_t n = arr.size();
  const auto& cs = arr.covectors();

  IntersectionPoset poset;
  poset.ambient_dim = dim;
  poset.hyperplane_count = n;

  Flat ambient;
  ambient.subspace_dim = dim;
  for (std::size_t k = 0; k < dim; ++k) ambient.basis.push_back(unit_vector(dim, k));
  ambient.incident = IndexSet(n);
  ambient.mobius = 1;
  poset.flats.push_back(std::move(ambient));

  std::unordered_map<IndexSet, std::size_t, IndexSetHash> seen;
  seen.emplace(poset.flats[0].incident, 0);

  // covers[y] lists the flats directly above y.
  std::vector<std::vector<std::uint32_t>> covers(1);
  std::size_t level_begin = 0;
  std::size_t level_end = 1;
  while (level_begin < level_end) {
    for (std::size_t x = level_begin; x < level_end; ++x) {
      // A hyperplane already contained in a child of x yields that same child.
      IndexSet covered = poset.flats[x].incident;
      for (std::size_t h = 0; h < n; ++h) {
        if (covered.test(h)) continue;
        Flat y;
        y.basis = cut(poset.flats[x].basis, cs[h]);
        y.subspace_dim = y.basis.size();
        y.incident = poset.flats[x].incident;
        for (std::size_t i = 0; i < n; ++i) {
          if (!y.incident.test(i) && (i == h || annihilates(cs[i], y.basis))) y.incident.set(i);
        }
        covered |= y.incident;
        const auto [it, fresh] = seen.emplace(y.incident, poset.flats.size());
        if (fresh) {
          poset.flats.push_back(std::move(y));
          covers.emplace_back();
        }
        covers[it->second].push_back(static_cast<std::uint32_t>(x));
      }
    }
    level_begin = level_end;
    level_end = poset.flats.size();
  }

  // mu(x) = -sum of mu over the strict upper set of x, walked through covers.
  std::vector<std::size_t> stamp(poset.flats.size(), 0);
  std::vector<std::uint32_t> stack;
  for (std::size_t x = 1; x < poset.flats.size(); ++x) {
    Integer mu = 0;
    stack.assign(covers[x].begin(), covers[x].end());
    for (auto y : stack) stamp[y] = x;
    while (!stack.empty()) {
      const auto y = stack.back();
      stack.pop_back();
      mu -= poset.flats[y].mobius;
      for (auto z : covers[y]) {
        if (stamp[z] != x) {
          stamp[z] = x;
          stack.push_back(z);
        }
      }
    }
    poset.flats[x].mobius = mu;
  }
  return poset;
}

Integer CharPoly::operator()(const Integer& t) const {
  Integer acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * t + coeffs[k];
  return acc;
}

CharPoly characteristic_polynomial(const IntersectionPoset& poset) {
  CharPoly chi;
  chi.coeffs.assign(poset.ambient_dim + 1, 0);
  for (const auto& f : poset.flats) chi.coeffs[f.subspace_dim] += f.mobius;
  return chi;
}

Integer count_regions_projective(const IntersectionPoset& poset) {
  Integer central = abs(characteristic_polynomial(poset)(Integer(-1)));
  if (central % 2 != 0) throw std::logic_error("odd central region count");
  return central / 2;
}

Integer count_regions_projective(const ProjArrangement& arr) {
  return count_regions_projective(build_intersection_poset(arr));
}

MultiplicityReport max_point_multiplicity(const IntersectionPoset& poset) {
  MultiplicityReport best;
  bool found = false;
  for (const auto& f : poset.flats) {
    if (f.subspace_dim < 1) continue;
    const std::size_t m = f.multiplicity();
    if (!found || m > best.m || (m == best.m && f.subspace_dim < best.witness.subspace_dim)) {
      best.m = m;
      best.witness = f;
      found = true;
    }
  }
  return best;
}

MultiplicityReport max_point_multiplicity(const ProjArrangement& arr) {
  return max_point_multiplicity(build_intersection_poset(arr));
}

ProjArrangement restrict_to_flat(const ProjArrangement& arr, const Flat& flat) {
  if (flat.subspace_dim < 2) {
    throw Error(ErrorCode::FlatTooSmall, "flat of subspace dimension " + std::to_string(flat.subspace_dim));
  }
  std::vector<IntVector> traces;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    if (flat.incident.capacity() == arr.size() && flat.incident.test(i)) continue;
    IntVector t(flat.subspace_dim);
    for (std::size_t k = 0; k < flat.subspace_dim; ++k) t[k] = dot(arr[i], flat.basis[k]);
    if (t.is_zero()) continue;
    t = primitive_normalize(t);
    if (std::find(traces.begin(), traces.end(), t) == traces.end()) traces.push_back(std::move(t));
  }
  return ProjArrangement::unchecked(flat.subspace_dim - 1, std::move(traces));
}

}  // namespace arrcount::projarr
