#include "arrcount/bounds.hpp"

#include <algorithm>

namespace arrcount::bounds {

ManifoldDescriptor ManifoldDescriptor::sphere(std::size_t d) {
  return {ManifoldKind::Sphere, d, 0, CoefficientGroup::Z};
}

ManifoldDescriptor ManifoldDescriptor::projective_space(std::size_t d) {
  return {ManifoldKind::ProjectiveSpace, d, 0, CoefficientGroup::Z2};
}

ManifoldDescriptor ManifoldDescriptor::torus(std::size_t d) {
  return {ManifoldKind::Torus, d, 0, CoefficientGroup::Z};
}

ManifoldDescriptor ManifoldDescriptor::orientable_surface(std::size_t g) {
  return {ManifoldKind::OrientableSurface, 2, g, CoefficientGroup::Z};
}

ManifoldDescriptor ManifoldDescriptor::klein_bottle() {
  return {ManifoldKind::KleinBottle, 2, 0, CoefficientGroup::Z2};
}

std::string ManifoldDescriptor::name() const {
  switch (kind) {
    case ManifoldKind::Sphere: return "S^" + std::to_string(dim);
    case ManifoldKind::ProjectiveSpace: return "RP^" + std::to_string(dim);
    case ManifoldKind::Torus: return "T^" + std::to_string(dim);
    case ManifoldKind::OrientableSurface: return "Sigma_" + std::to_string(genus);
    case ManifoldKind::KleinBottle: return "K";
  }
  return "?";
}

std::size_t h_dim(const ManifoldDescriptor& m) {
  if (m.dim < 1) throw Error(ErrorCode::UnsupportedManifold, "dimension must be >= 1");
  switch (m.kind) {
    case ManifoldKind::Sphere: return m.dim == 1 ? 1 : 0;
    case ManifoldKind::ProjectiveSpace: return 1;
    case ManifoldKind::Torus: return m.dim;
    case ManifoldKind::OrientableSurface:
      if (m.dim != 2) throw Error(ErrorCode::UnsupportedManifold, "orientable surfaces have dimension 2");
      return 2 * m.genus;
    case ManifoldKind::KleinBottle:
      if (m.dim != 2) throw Error(ErrorCode::UnsupportedManifold, "the Klein bottle has dimension 2");
      return 2;
  }
  throw Error(ErrorCode::UnsupportedManifold, "unknown manifold kind");
}

BoundValue bound_homological(std::size_t k, const ManifoldDescriptor& m) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "need at least one submanifold");
  return BoundValue::of(Rational(static_cast<long>(k) + 1 - static_cast<long>(h_dim(m))));
}

namespace {

void require_multiplicity(std::size_t n, std::size_t d, std::size_t m) {
  if (m < d || m > n) {
    throw Error(ErrorCode::InvalidArgument, "need d <= m <= n (n=" + std::to_string(n) + ", d=" + std::to_string(d) +
                                                ", m=" + std::to_string(m) + ")");
  }
}

Integer pow2(long e) {
  Integer r = 1;
  r <<= static_cast<unsigned long>(e);
  return r;
}

}  // namespace

BoundValue bound_lemma3(std::size_t n, std::size_t d, std::size_t m) {
  require_multiplicity(n, d, m);
  Rational sum = 0;
  for (std::size_t j = 0; 2 * j <= d; ++j) {
    const long top = static_cast<long>(d - 2 * j);
    const Integer denom = binomial(static_cast<long>(m - 2 * j), top);
    if (denom == 0) throw std::logic_error("C(m-2j, d-2j) vanished with m >= d");
    sum += Rational(binomial(static_cast<long>(n), top), denom);
  }
  return BoundValue::of(Rational(static_cast<long>(m - d + 1)) * sum);
}

BoundValue bound_lemma4(std::size_t n, std::size_t d, std::size_t m) {
  require_multiplicity(n, d, m);
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "bound needs d >= 2");
  const Integer v = Integer(static_cast<long>(n - m + 1)) * static_cast<long>(m - d + 2) * pow2(static_cast<long>(d) - 2);
  return BoundValue::of(Rational(v));
}

BoundValue bound_mcmullen(std::size_t n, std::size_t d) {
  if (n < d + 1 || d < 1) throw Error(ErrorCode::InvalidArgument, "need n >= d+1");
  return BoundValue::of(Rational(Integer(Integer(static_cast<long>(n - d + 1)) * pow2(static_cast<long>(d) - 1))));
}

BoundValue bound_lemma6(std::size_t n, std::size_t d, std::size_t m) {
  if (m < d) throw Error(ErrorCode::InvalidArgument, "need m >= d");
  const Integer nn = static_cast<unsigned long>(n);
  return BoundValue::of(Rational(2 * (nn * nn - nn), Integer(static_cast<long>(m - d + 5))));
}

Theorem4Spectrum spectrum_theorem4(std::size_t n, std::size_t d) {
  if (d < 3 || n < 2 * d + 5) {
    throw Error(ErrorCode::OutOfTheoremRange,
                "needs d >= 3 and n >= 2d+5 (n=" + std::to_string(n) + ", d=" + std::to_string(d) + ")");
  }
  const long nd = static_cast<long>(n - d);
  const Integer p3 = pow2(static_cast<long>(d) - 3);
  Theorem4Spectrum s;
  s.values = {Integer(nd + 1) * 4 * p3, Integer(3 * nd) * 2 * p3, Integer(3 * nd + 1) * 2 * p3, Integer(7 * nd) * p3};
  for (std::size_t i = 1; i < s.values.size(); ++i) {
    if (!(s.values[i - 1] < s.values[i])) throw std::logic_error("smallest counts not increasing");
  }
  s.threshold = s.values.back();
  return s;
}

const std::vector<LinearForm>& theorem5_forms() {
  static const std::vector<LinearForm> forms = {
      {4, 8},   {6, 18},  {6, 16},  {7, 21},  {7, 20},  {8, 32},  {8, 30},  {8, 28},  {8, 26},
      {9, 36},  {9, 33},  {9, 31},  {9, 30},  {10, 50}, {10, 48}, {10, 46}, {10, 44}, {10, 42},
      {10, 40}, {10, 39}, {10, 38}, {10, 37}, {10, 36}, {10, 35}, {11, 44}, {11, 43}, {11, 42},
      {11, 41}, {11, 40}, {12, 72}, {12, 70}, {12, 68}, {12, 66}, {12, 64}, {12, 62}, {12, 60},
  };
  return forms;
}

std::vector<Integer> spectrum_theorem5(std::size_t n) {
  if (n < 50) throw Error(ErrorCode::OutOfTheoremRange, "needs n >= 50 (n=" + std::to_string(n) + ")");
  std::vector<Integer> values;
  for (const auto& f : theorem5_forms()) values.push_back(f.at(n));
  std::vector<Integer> sorted = values;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != values || std::adjacent_find(values.begin(), values.end()) != values.end()) {
    throw std::logic_error("listed d=3 counts are not strictly increasing");
  }
  return values;
}

std::set<Integer> martinov_subset(std::size_t n) {
  if (n < 7) throw Error(ErrorCode::OutOfTheoremRange, "needs n >= 7");
  const long v = static_cast<long>(n);
  return {Integer(2 * v - 2), Integer(3 * v - 6), Integer(3 * v - 5), Integer(4 * v - 12)};
}

std::set<Integer> martinov_subset_quoted(std::size_t n) {
  if (n < 8) throw Error(ErrorCode::OutOfTheoremRange, "needs n >= 8");
  const long v = static_cast<long>(n);
  return {Integer(2 * v - 4), Integer(3 * v - 9), Integer(3 * v - 8), Integer(4 * v - 16)};
}

bool toric_spectrum_membership(std::size_t n, std::size_t d, const Integer& f) {
  if (n < 2 || d < 2) throw Error(ErrorCode::InvalidArgument, "needs n >= 2 and d >= 2");
  if (f < 1) throw Error(ErrorCode::InvalidArgument, "region counts are positive");
  if (n <= d) return true;
  const long nl = static_cast<long>(n);
  const long dl = static_cast<long>(d);
  return (f >= nl - dl + 1 && f <= nl) || f >= 2 * (nl - dl);
}

std::vector<Integer> toric_predicted(std::size_t n, std::size_t d, const Integer& cap) {
  std::vector<Integer> out;
  for (Integer f = 1; f <= cap; ++f) {
    if (toric_spectrum_membership(n, d, f)) out.push_back(f);
  }
  return out;
}

}  // namespace arrcount::bounds
