#include "arrcount/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace arrcount::generators {

using projarr::ProjArrangement;

std::string Recipe::param(const std::string& key) const {
  for (const auto& [k, v] : params) {
    if (k == key) return v;
  }
  return {};
}

std::string Recipe::str() const {
  std::string s = family;
  if (!params.empty()) {
    s += '[';
    for (std::size_t i = 0; i < params.size(); ++i) {
      if (i) s += ',';
      s += params[i].first + '=' + params[i].second;
    }
    s += ']';
  }
  if (!inputs.empty()) {
    s += '(';
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (i) s += ',';
      s += inputs[i].str();
    }
    s += ')';
  }
  return s;
}

namespace {

std::string num(std::size_t v) { return std::to_string(v); }

std::size_t get_count(const Recipe& r, const std::string& key) {
  const std::string v = r.param(key);
  if (v.empty()) throw Error(ErrorCode::ParseError, r.family + " needs parameter " + key);
  try {
    std::size_t pos = 0;
    const unsigned long x = std::stoul(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "parameter " + key + "=" + v + " is not a count");
  }
}

// "(1, -2, 3)"
IntVector parse_vector(const std::string& text) {
  std::string body = text;
  body.erase(std::remove_if(body.begin(), body.end(), [](char c) { return c == '(' || c == ')' || c == ' '; }),
             body.end());
  std::vector<Integer> entries;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer v;
    if (item.empty() || v.set_str(item, 10) != 0) throw Error(ErrorCode::ParseError, "bad vector " + text);
    entries.push_back(v);
  }
  return IntVector(std::move(entries));
}

std::string join_vectors(const std::vector<IntVector>& vs) {
  std::string s;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) s += ';';
    s += vs[i].str();
  }
  return s;
}

std::vector<IntVector> split_vectors(const std::string& text) {
  std::vector<IntVector> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_vector(item));
  return out;
}

std::string join_rationals(const std::vector<Rational>& rs) {
  std::string s;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i) s += ';';
    s += rs[i].str();
  }
  return s;
}

std::vector<Rational> split_rationals(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(Rational::parse(item));
  return out;
}

Projective finish(std::size_t d, std::vector<IntVector> covectors, Recipe recipe) {
  return Projective{ProjArrangement::make(d, std::move(covectors)), std::move(recipe)};
}

void require_plane(const Projective& base, const char* what) {
  if (base.arrangement.d() != 2) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a d = 2 base");
}

const std::vector<long> kLargePrimes = {1009, 1013, 1019, 1021, 1031, 1033, 1039, 1049, 1051, 1061, 1063, 1069};

std::vector<IntVector> lift_with_extras(const ProjArrangement& base, const std::vector<IntVector>& v) {
  const std::size_t d = base.d() + 1;
  std::vector<IntVector> cs;
  for (const auto& u : base.covectors()) {
    IntVector w(d + 1);
    for (std::size_t i = 0; i < d; ++i) w[i] = u[i];
    cs.push_back(std::move(w));
  }
  for (const auto& x : v) {
    if (x.dim() != d) throw Error(ErrorCode::InvalidArgument, "extra " + x.str() + " has wrong dimension");
    IntVector w(d + 1);
    for (std::size_t i = 0; i < d; ++i) w[i] = x[i];
    w[d] = 1;
    cs.push_back(std::move(w));
  }
  return cs;
}

bool contains_line(const ProjArrangement& base, const IntVector& l) {
  const IntVector n = primitive_normalize(l);
  return std::find(base.covectors().begin(), base.covectors().end(), n) != base.covectors().end();
}

// f = 3 f(base) + k for two extras whose common line lies over l.
std::optional<Integer> two_extra_expected(const Projective& base, const IntVector& l) {
  if (!base.recipe.expected_f || base.arrangement.d() != 2) return std::nullopt;
  const Integer phi = *base.recipe.expected_f;
  if (contains_line(base.arrangement, l)) return 3 * phi;
  return 3 * phi + static_cast<unsigned long>(trace_points(base.arrangement, l).size());
}

}  // namespace

Projective general_position(std::size_t n, std::size_t d) {
  if (d < 1 || n < d + 1) throw Error(ErrorCode::InvalidArgument, "general_position needs n >= d+1");
  std::vector<IntVector> cs;
  for (std::size_t t = 1; t <= n; ++t) {
    IntVector v(d + 1);
    Integer p = 1;
    for (std::size_t i = 0; i <= d; ++i) {
      v[i] = p;
      p *= static_cast<unsigned long>(t);
    }
    cs.push_back(std::move(v));
  }
  Integer f = 0;
  for (std::size_t i = 0; i <= d; ++i) f += binomial(static_cast<long>(n - 1), static_cast<long>(i));
  return finish(d, std::move(cs), Recipe{"general_position", {{"n", num(n)}, {"d", num(d)}}, {}, f});
}

Projective near_pencil(std::size_t n) {
  if (n < 3) throw Error(ErrorCode::InvalidArgument, "near_pencil needs n >= 3");
  std::vector<IntVector> cs;
  for (long t = 0; t + 1 < static_cast<long>(n); ++t) cs.push_back(IntVector{1, t, 0});
  cs.push_back(IntVector{0, 0, 1});
  return finish(2, std::move(cs), Recipe{"near_pencil", {{"n", num(n)}}, {}, Integer(2 * static_cast<long>(n) - 2)});
}

Projective pencil_plus(std::size_t n, std::size_t k, std::size_t j) {
  if (k < 1 || n < k + 1) throw Error(ErrorCode::InvalidArgument, "pencil_plus needs 1 <= k < n");
  const std::size_t pairs = k * (k - 1) / 2;
  if (j > std::min(n - k, pairs)) throw Error(ErrorCode::PlacementUnavailable, "j exceeds min(n-k, C(k,2))");
  // Two conic lines and only their special line would be three concurrent lines.
  if (n == 3 && j == 1) throw Error(ErrorCode::PlacementUnavailable, "three concurrent lines");

  // Lines (1, t, t^2) and (1, s, s^2) meet at (ts, -(t+s), 1); the pencil line
  // through it is (t+s, ts, 0). Distinct ratios keep those points off each
  // other's pencil lines.
  std::vector<IntVector> special;
  std::set<IntVector> seen;
  for (long t = 1; t <= static_cast<long>(k); ++t) {
    for (long s = t + 1; s <= static_cast<long>(k); ++s) {
      const IntVector dir = primitive_normalize(IntVector{t + s, t * s, 0});
      if (!seen.insert(dir).second) throw Error(ErrorCode::PlacementUnavailable, "collinear intersection points");
      special.push_back(dir);
    }
  }
  std::vector<IntVector> cs;
  for (std::size_t i = 0; i < j; ++i) cs.push_back(special[i]);
  for (long r = 0; cs.size() < n - k; ++r) cs.push_back(IntVector{1, -r, 0});
  for (long t = 1; t <= static_cast<long>(k); ++t) cs.push_back(IntVector{1, t, t * t});
  const Integer f = Integer(static_cast<unsigned long>((n - k) * (k + 1) + pairs)) - static_cast<unsigned long>(j);
  return finish(2, std::move(cs), Recipe{"pencil_plus", {{"n", num(n)}, {"k", num(k)}, {"j", num(j)}}, {}, f});
}

Projective double_pencil(std::size_t a, std::size_t b, bool with_common_line) {
  if (a < 2 || b < 2) throw Error(ErrorCode::InvalidArgument, "double_pencil needs a, b >= 2");
  std::vector<IntVector> cs;
  const long skip = with_common_line ? 1 : 0;
  if (with_common_line) cs.push_back(IntVector{1, 0, 0});
  for (long t = 1; t <= static_cast<long>(a) - skip; ++t) cs.push_back(IntVector{t, 1, 0});
  for (long t = 1; t <= static_cast<long>(b) - skip; ++t) cs.push_back(IntVector{t, 0, 1});
  const Integer ab = Integer(static_cast<unsigned long>(a * b));
  const Integer f = with_common_line ? ab : ab + static_cast<unsigned long>(a + b - 1);
  return finish(2, std::move(cs),
                Recipe{"double_pencil", {{"a", num(a)}, {"b", num(b)}, {"common", with_common_line ? "1" : "0"}}, {}, f});
}

Projective cone(const Projective& base, std::size_t extras, Placement placement, std::size_t line) {
  if (extras < 1) throw Error(ErrorCode::CommonPoint, "a cone needs a hyperplane off the apex");
  const std::size_t d = base.arrangement.d() + 1;
  std::vector<IntVector> v;
  Recipe recipe{"cone", {{"extras", num(extras)}}, {base.recipe}, std::nullopt};
  if (placement == Placement::Generic) {
    recipe.params.emplace_back("placement", "generic");
    v.push_back(IntVector(d));
    for (std::size_t j = 1; j < extras; ++j) {
      if (j - 1 >= kLargePrimes.size()) throw Error(ErrorCode::TooLarge, "too many generic extras");
      IntVector x(d);
      Integer p = 1;
      for (std::size_t i = 0; i < d; ++i) {
        x[i] = p;
        p *= kLargePrimes[j - 1];
      }
      v.push_back(std::move(x));
    }
    if (base.recipe.expected_f && extras == 1) recipe.expected_f = 2 * *base.recipe.expected_f;
  } else {
    if (line >= base.arrangement.size()) throw Error(ErrorCode::PlacementUnavailable, "no base hyperplane " + num(line));
    recipe.params.emplace_back("placement", "common_flat");
    recipe.params.emplace_back("line", num(line));
    for (std::size_t j = 0; j < extras; ++j) v.push_back(base.arrangement[line].scaled(static_cast<unsigned long>(j)));
    if (base.recipe.expected_f) recipe.expected_f = Integer(static_cast<unsigned long>(extras + 1)) * *base.recipe.expected_f;
  }
  auto cs = lift_with_extras(base.arrangement, v);
  if (placement == Placement::Generic) {
    // Generic extras: no extra normal difference may coincide with a base hyperplane.
    for (std::size_t a = 0; a < v.size(); ++a) {
      for (std::size_t b = a + 1; b < v.size(); ++b) {
        IntVector diff(d);
        for (std::size_t i = 0; i < d; ++i) diff[i] = v[a][i] - v[b][i];
        if (contains_line(base.arrangement, diff)) throw std::logic_error("generic extras are not generic");
      }
    }
  }
  return finish(d, std::move(cs), std::move(recipe));
}

Projective apex_extras(const Projective& base, const std::vector<IntVector>& v) {
  if (v.empty()) throw Error(ErrorCode::CommonPoint, "a cone needs a hyperplane off the apex");
  Recipe recipe{"apex_extras", {{"v", join_vectors(v)}}, {base.recipe}, std::nullopt};
  if (base.recipe.expected_f && v.size() == 1) recipe.expected_f = 2 * *base.recipe.expected_f;
  if (v.size() == 2 && base.arrangement.d() == 2) {
    IntVector l(3);
    for (std::size_t i = 0; i < 3; ++i) l[i] = v[1][i] - v[0][i];
    if (!l.is_zero()) recipe.expected_f = two_extra_expected(base, l);
  }
  return finish(base.arrangement.d() + 1, lift_with_extras(base.arrangement, v), std::move(recipe));
}

std::vector<IntVector> trace_points(const ProjArrangement& base, const IntVector& l) {
  std::set<IntVector> pts;
  for (const auto& u : base.covectors()) {
    const IntVector p = cross(u, l);
    if (!p.is_zero()) pts.insert(primitive_normalize(p));
  }
  return {pts.begin(), pts.end()};
}

std::vector<std::pair<IntVector, std::size_t>> intersection_points(const ProjArrangement& base) {
  std::set<IntVector> pts;
  const auto& cs = base.covectors();
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) pts.insert(primitive_normalize(cross(cs[i], cs[j])));
  }
  std::vector<std::pair<IntVector, std::size_t>> out;
  for (const auto& p : pts) {
    std::size_t m = 0;
    for (const auto& u : cs) m += dot(u, p) == 0 ? 1 : 0;
    out.emplace_back(p, m);
  }
  return out;
}

IntVector generic_point(const ProjArrangement& base, std::size_t salt) {
  const auto pts = intersection_points(base);
  std::vector<IntVector> lines = base.covectors();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) lines.push_back(cross(pts[i].first, pts[j].first));
  }
  // Candidates on a conic: each line rejects at most two of them.
  std::size_t accepted = 0;
  for (long q = 101;; ++q) {
    const IntVector g{1, q, q * q};
    const bool clear = std::all_of(lines.begin(), lines.end(), [&](const IntVector& l) { return dot(l, g) != 0; });
    if (clear && accepted++ == salt) return g;
  }
}

Projective two_extra_planes_line(const Projective& base, const IntVector& l, const std::string& label) {
  require_plane(base, "two_extra_planes");
  if (l.dim() != 3 || l.is_zero()) throw Error(ErrorCode::InvalidArgument, "l must be a nonzero covector of RP^2");
  auto cs = lift_with_extras(base.arrangement, {IntVector(3), l});
  Recipe recipe{"two_extra_planes", {{"l", l.str()}}, {base.recipe}, two_extra_expected(base, l)};
  if (!label.empty()) recipe.params.emplace_back("placement", label);
  return finish(3, std::move(cs), std::move(recipe));
}

Projective two_extra_planes(std::size_t n, const Projective& base, std::size_t trace_coincidences, bool in_union) {
  require_plane(base, "two_extra_planes");
  if (n < 7) throw Error(ErrorCode::InvalidArgument, "two_extra_planes needs n >= 7");
  if (base.arrangement.size() + 2 != n) throw Error(ErrorCode::InvalidArgument, "base must have n-2 lines");
  if (in_union) return two_extra_planes_line(base, base.arrangement[0], "in_union");

  const auto pts = intersection_points(base.arrangement);
  const std::size_t lines = base.arrangement.size();
  if (trace_coincidences == 0) {
    for (std::size_t salt = 0;; ++salt) {
      const IntVector l = cross(generic_point(base.arrangement, 2 * salt), generic_point(base.arrangement, 2 * salt + 1));
      if (trace_points(base.arrangement, l).size() == lines) return two_extra_planes_line(base, l, "generic");
    }
  }
  for (const auto& [p, m] : pts) {
    if (m != trace_coincidences + 1) continue;
    const IntVector l = cross(p, generic_point(base.arrangement));
    if (trace_points(base.arrangement, l).size() != lines - trace_coincidences) {
      throw std::logic_error("generic point is not generic");
    }
    return two_extra_planes_line(base, l, "through_point_" + num(m));
  }
  throw Error(ErrorCode::PlacementUnavailable, "no base point on exactly " + num(trace_coincidences + 1) + " lines");
}

Toric toric_construction_a(std::size_t n, std::size_t d, std::size_t k, std::vector<Rational> offsets) {
  if (d < 1 || k + 1 > d) throw Error(ErrorCode::InvalidArgument, "construction_a needs 0 <= k <= d-1");
  if (n < k + 1) throw Error(ErrorCode::InvalidArgument, "construction_a needs n >= k+1");
  const std::size_t parallel = n - k;
  if (offsets.empty()) {
    for (std::size_t j = 1; j <= parallel; ++j) offsets.emplace_back(Integer(static_cast<unsigned long>(j)), Integer(static_cast<unsigned long>(parallel + 1)));
  }
  if (offsets.size() != parallel) throw Error(ErrorCode::InvalidArgument, "construction_a needs n-k offsets");
  std::set<Rational> fracs;
  for (const auto& c : offsets) {
    if (!fracs.insert(c.frac()).second) throw Error(ErrorCode::OffsetCollision, "offset " + c.str() + " repeats mod 1");
  }
  std::vector<toric::Subtorus> subs;
  for (std::size_t i = 0; i < k; ++i) subs.push_back(toric::Subtorus::make(unit_vector(d, i), 0));
  for (const auto& c : offsets) subs.push_back(toric::Subtorus::make(unit_vector(d, k), c));
  Recipe recipe{"toric_construction_a", {{"n", num(n)}, {"d", num(d)}, {"k", num(k)}, {"c", join_rationals(offsets)}}, {},
                Integer(static_cast<unsigned long>(parallel))};
  return Toric{toric::ToricArrangement::make(d, std::move(subs)), std::move(recipe)};
}

Toric toric_construction_b(std::size_t n, std::size_t d, std::size_t slope, std::vector<Rational> offsets) {
  if (d < 2) throw Error(ErrorCode::InvalidArgument, "construction_b needs d >= 2");
  if (n < d + 1) throw Error(ErrorCode::InvalidArgument, "construction_b needs n >= d+1");
  const std::size_t m = n - d;
  if (offsets.empty()) {
    for (std::size_t j = 1; j <= m; ++j) offsets.emplace_back(Integer(static_cast<unsigned long>(2 * j - 1)), Integer(static_cast<unsigned long>(2 * m + 1)));
  }
  if (offsets.size() != m) throw Error(ErrorCode::InvalidArgument, "construction_b needs n-d offsets");
  std::set<Rational> fracs;
  for (const auto& c : offsets) {
    if (!fracs.insert(c.frac()).second) throw Error(ErrorCode::OffsetCollision, "offset " + c.str() + " repeats mod 1");
    if ((Rational(static_cast<long>(slope)) * c + Rational(1, 2)).is_integer()) {
      throw Error(ErrorCode::TripleIntersection, "k*c + 1/2 is an integer for c = " + c.str());
    }
  }
  std::vector<toric::Subtorus> subs;
  for (std::size_t i = 1; i < d; ++i) subs.push_back(toric::Subtorus::make(unit_vector(d, i), 0));
  IntVector a(d);
  a[0] = -static_cast<long>(slope);
  a[1] = 1;
  subs.push_back(toric::Subtorus::make(a, Rational(1, 2)));
  for (const auto& c : offsets) subs.push_back(toric::Subtorus::make(unit_vector(d, 0), c));
  Recipe recipe{"toric_construction_b",
                {{"n", num(n)}, {"d", num(d)}, {"k", num(slope)}, {"c", join_rationals(offsets)}},
                {},
                Integer(static_cast<unsigned long>(2 * n + slope)) - static_cast<unsigned long>(2 * d)};
  return Toric{toric::ToricArrangement::make(d, std::move(subs)), std::move(recipe)};
}

Toric toric_slope_pair(std::size_t n, std::size_t d, std::size_t slope) {
  if (n < 2 || n > d) throw Error(ErrorCode::InvalidArgument, "slope_pair needs 2 <= n <= d");
  if (slope < 1) throw Error(ErrorCode::InvalidArgument, "slope_pair needs slope >= 1");
  std::vector<toric::Subtorus> subs;
  subs.push_back(toric::Subtorus::make(unit_vector(d, 1), 0));
  IntVector a(d);
  a[0] = -static_cast<long>(slope);
  a[1] = 1;
  subs.push_back(toric::Subtorus::make(a, Rational(1, 2)));
  for (std::size_t i = 2; i < n; ++i) subs.push_back(toric::Subtorus::make(unit_vector(d, i), 0));
  Recipe recipe{"toric_slope_pair", {{"n", num(n)}, {"d", num(d)}, {"k", num(slope)}}, {},
                Integer(static_cast<unsigned long>(slope))};
  return Toric{toric::ToricArrangement::make(d, std::move(subs)), std::move(recipe)};
}

Toric toric_explicit(std::size_t d, const std::vector<toric::Subtorus>& subtori, const std::string& label) {
  std::string s;
  for (std::size_t i = 0; i < subtori.size(); ++i) {
    if (i) s += ';';
    s += subtori[i].normal().str() + "=" + subtori[i].offset().str();
  }
  Recipe recipe{"toric_explicit", {{"d", num(d)}, {"subtori", s}}, {}, std::nullopt};
  if (!label.empty()) recipe.params.emplace_back("label", label);
  return Toric{toric::ToricArrangement::make(d, subtori), std::move(recipe)};
}

bool is_toric_family(const std::string& family) { return family.rfind("toric_", 0) == 0; }

Projective realize_projective(const Recipe& r) {
  auto base = [&]() {
    if (r.inputs.size() != 1) throw Error(ErrorCode::ParseError, r.family + " needs one input recipe");
    return realize_projective(r.inputs[0]);
  };
  Projective out;
  if (r.family == "general_position") {
    out = general_position(get_count(r, "n"), get_count(r, "d"));
  } else if (r.family == "near_pencil") {
    out = near_pencil(get_count(r, "n"));
  } else if (r.family == "pencil_plus") {
    out = pencil_plus(get_count(r, "n"), get_count(r, "k"), get_count(r, "j"));
  } else if (r.family == "double_pencil") {
    out = double_pencil(get_count(r, "a"), get_count(r, "b"), get_count(r, "common") != 0);
  } else if (r.family == "cone") {
    const std::string p = r.param("placement");
    if (p == "common_flat") out = cone(base(), get_count(r, "extras"), Placement::CommonFlat, get_count(r, "line"));
    else if (p == "generic" || p.empty()) out = cone(base(), get_count(r, "extras"));
    else throw Error(ErrorCode::ParseError, "unknown placement " + p);
  } else if (r.family == "apex_extras") {
    out = apex_extras(base(), split_vectors(r.param("v")));
  } else if (r.family == "two_extra_planes") {
    out = two_extra_planes_line(base(), parse_vector(r.param("l")), r.param("placement"));
  } else {
    throw Error(ErrorCode::ParseError, "unknown projective family " + r.family);
  }
  // Labels and expectations in a stored recipe may be richer than a rebuild.
  if (r.expected_f && out.recipe.expected_f && *r.expected_f != *out.recipe.expected_f) {
    throw Error(ErrorCode::ParseError, "recipe expects " + r.expected_f->get_str() + " but the family gives " +
                                           out.recipe.expected_f->get_str());
  }
  return out;
}

Toric realize_toric(const Recipe& r) {
  if (r.family == "toric_construction_a") {
    return toric_construction_a(get_count(r, "n"), get_count(r, "d"), get_count(r, "k"), split_rationals(r.param("c")));
  }
  if (r.family == "toric_construction_b") {
    return toric_construction_b(get_count(r, "n"), get_count(r, "d"), get_count(r, "k"), split_rationals(r.param("c")));
  }
  if (r.family == "toric_slope_pair") return toric_slope_pair(get_count(r, "n"), get_count(r, "d"), get_count(r, "k"));
  if (r.family == "toric_explicit") {
    std::vector<toric::Subtorus> subs;
    std::stringstream ss(r.param("subtori"));
    std::string item;
    while (std::getline(ss, item, ';')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "bad subtorus " + item);
      subs.push_back(toric::Subtorus::make(parse_vector(item.substr(0, eq)), Rational::parse(item.substr(eq + 1))));
    }
    return toric_explicit(get_count(r, "d"), subs, r.param("label"));
  }
  throw Error(ErrorCode::ParseError, "unknown toric family " + r.family);
}

}  // namespace arrcount::generators
