#include "arrcount/spectrum.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <functional>
#include <random>
#include <set>

namespace arrcount::spectrum {

using generators::Projective;
using generators::Recipe;
using generators::Toric;
using projarr::ProjArrangement;

std::string space_name(Space s) { return s == Space::Projective ? "projective" : "toric"; }

std::string membership_rule(Space space, std::size_t n, std::size_t d) {
  if (space == Space::Toric) return "toric";
  if (d == 2 && n >= 7) return "martinov";
  if (d == 3 && n >= 50) return "theorem5";
  if (d >= 3 && n >= 2 * d + 5) return "theorem4";
  return "lower_bound";
}

Integer default_cap(Space space, std::size_t n, std::size_t d) {
  const std::string rule = membership_rule(space, n, d);
  if (rule == "toric") {
    const std::size_t gap = n > d ? 2 * (n - d) : 0;
    return Integer(static_cast<unsigned long>(2 * std::max(gap, n)));
  }
  if (rule == "martinov") return Integer(4 * static_cast<long>(n) - 12);
  if (rule == "theorem5") return Integer(12 * static_cast<long>(n) - 60);
  if (rule == "theorem4") return bounds::spectrum_theorem4(n, d).threshold;
  return 2 * bounds::bound_mcmullen(n, d).ceil;
}

bool predicted_member(const std::string& rule, std::size_t n, std::size_t d, const Integer& f) {
  if (rule == "toric") return bounds::toric_spectrum_membership(n, d, f);
  if (rule == "martinov") return f > 4 * static_cast<long>(n) - 12 || bounds::martinov_subset(n).contains(f);
  if (rule == "theorem5") {
    const auto v = bounds::spectrum_theorem5(n);
    return f > v.back() || std::find(v.begin(), v.end(), f) != v.end();
  }
  if (rule == "theorem4") {
    const auto s = bounds::spectrum_theorem4(n, d);
    return f > s.threshold || std::find(s.values.begin(), s.values.end(), f) != s.values.end();
  }
  return f >= bounds::bound_mcmullen(n, d).ceil;
}

std::vector<Integer> predicted_values(const std::string& rule, std::size_t n, std::size_t d, const Integer& cap) {
  std::vector<Integer> all;
  if (rule == "toric") return bounds::toric_predicted(n, d, cap);
  if (rule == "martinov") {
    const auto s = bounds::martinov_subset(n);
    all.assign(s.begin(), s.end());
  } else if (rule == "theorem5") {
    all = bounds::spectrum_theorem5(n);
  } else if (rule == "theorem4") {
    all = bounds::spectrum_theorem4(n, d).values;
  }
  std::vector<Integer> out;
  for (const auto& f : all) {
    if (f <= cap) out.push_back(f);
  }
  return out;
}

Integer predict_apex_count(const ProjArrangement& base, const std::vector<IntVector>& v) {
  if (base.d() != 2) throw Error(ErrorCode::InvalidArgument, "predict_apex_count needs a d = 2 base");
  const Integer phi = projarr::count_regions_projective(base);
  Integer f = phi;
  for (std::size_t j = 0; j < v.size(); ++j) {
    // Extra j meets the cone in the base lines and the earlier extras in lines over v_i - v_j.
    std::vector<IntVector> lines = base.covectors();
    for (std::size_t i = 0; i < j; ++i) {
      IntVector l(3);
      for (std::size_t c = 0; c < 3; ++c) l[c] = v[i][c] - v[j][c];
      if (l.is_zero()) throw Error(ErrorCode::DuplicateHyperplane, "equal extras");
      lines.push_back(primitive_normalize(l));
    }
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
    f += j == 0 ? phi : projarr::count_regions_projective(ProjArrangement::unchecked(2, lines));
  }
  return f;
}

namespace {

struct Candidate {
  Integer predicted;
  std::function<Projective()> build;
};

class CandidateList {
 public:
  explicit CandidateList(Integer cap) : cap_(std::move(cap)) {}

  void add(const Integer& predicted, std::function<Projective()> build) {
    if (predicted <= cap_) items_.push_back(Candidate{predicted, std::move(build)});
  }
  const Integer& cap() const { return cap_; }
  const std::vector<Candidate>& items() const { return items_; }

 private:
  Integer cap_;
  std::vector<Candidate> items_;
};

// Plane arrangements of n lines in a fixed order.
std::vector<Projective> plane_recipes(std::size_t n) {
  std::vector<Projective> out;
  if (n < 3) return out;
  out.push_back(generators::near_pencil(n));
  for (std::size_t k = 2; k <= std::min<std::size_t>(5, n - 1); ++k) {
    for (std::size_t j = 0; j <= std::min(n - k, k * (k - 1) / 2) && !(n == 3 && j == 1); ++j) out.push_back(generators::pencil_plus(n, k, j));
  }
  for (std::size_t a = 3; a <= (n + 1) / 2; ++a) out.push_back(generators::double_pencil(a, n + 1 - a, true));
  for (std::size_t a = 2; a <= n / 2; ++a) out.push_back(generators::double_pencil(a, n - a, false));
  out.push_back(generators::general_position(n, 2));
  return out;
}

const Integer& phi_of(const Projective& p) { return *p.recipe.expected_f; }

// Up to `per_class` points of each multiplicity, in point order.
std::vector<std::pair<IntVector, std::size_t>> representative_points(const ProjArrangement& base,
                                                                      std::size_t per_class) {
  std::map<std::size_t, std::size_t> taken;
  std::vector<std::pair<IntVector, std::size_t>> out;
  for (const auto& pm : generators::intersection_points(base)) {
    if (taken[pm.second]++ < per_class) out.push_back(pm);
  }
  return out;
}

bool same_line(const IntVector& a, const IntVector& b) { return cross(a, b).is_zero(); }

// Lines through r: base lines, lines to representative points, generic lines.
std::vector<IntVector> lines_through(const ProjArrangement& base, const IntVector& r,
                                     const std::vector<std::pair<IntVector, std::size_t>>& reps,
                                     std::size_t max_lines) {
  std::vector<IntVector> out;
  auto push = [&](const IntVector& l) {
    if (l.is_zero() || out.size() >= max_lines) return;
    const IntVector n = primitive_normalize(l);
    for (const auto& o : out) {
      if (same_line(o, n)) return;
    }
    out.push_back(n);
  };
  for (std::size_t salt = 0; salt < 3; ++salt) push(cross(r, generators::generic_point(base, 3 + salt)));
  std::size_t through_base = 0;
  for (const auto& u : base.covectors()) {
    if (dot(u, r) == 0 && through_base < 2) {
      push(u);
      ++through_base;
    }
  }
  for (const auto& [p, m] : reps) {
    if (!same_line(p, r)) push(cross(r, p));
  }
  return out;
}

// Points used as concurrency centres for three or more extras.
std::vector<IntVector> centres(const ProjArrangement& base, const std::vector<std::pair<IntVector, std::size_t>>& reps) {
  std::vector<IntVector> out;
  for (const auto& pm : reps) out.push_back(pm.first);
  // A generic point on the first and on the last base line.
  for (const IntVector& u : {base.covectors().front(), base.covectors().back()}) {
    out.push_back(primitive_normalize(cross(u, cross(generators::generic_point(base, 0), generators::generic_point(base, 1)))));
  }
  out.push_back(generators::generic_point(base, 2));
  return out;
}

void add_two_extras(CandidateList& list, const Projective& b) {
  const auto& base = b.arrangement;
  const Integer phi3 = 3 * phi_of(b);
  if (phi3 > list.cap()) return;
  auto add_line = [&](const IntVector& l, const std::string& label) {
    const Integer k = std::find(base.covectors().begin(), base.covectors().end(), primitive_normalize(l)) !=
                              base.covectors().end()
                          ? Integer(0)
                          : Integer(static_cast<unsigned long>(generators::trace_points(base, l).size()));
    list.add(phi3 + k, [b, l, label] { return generators::two_extra_planes_line(b, l, label); });
  };
  add_line(base[0], "in_union");
  const auto reps = representative_points(base, 3);
  const IntVector g = generators::generic_point(base);
  for (const auto& [p, m] : reps) add_line(cross(p, g), "through_point_" + std::to_string(m));
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      const IntVector l = cross(reps[i].first, reps[j].first);
      add_line(l, "through_points_" + std::to_string(reps[i].second) + "_" + std::to_string(reps[j].second));
    }
  }
  add_line(cross(generators::generic_point(base, 0), generators::generic_point(base, 1)), "generic");
}

void add_apex_set(CandidateList& list, const Projective& b, std::vector<IntVector> v) {
  std::set<IntVector> distinct(v.begin(), v.end());
  if (distinct.size() != v.size()) return;
  Integer pred;
  try {
    pred = predict_apex_count(b.arrangement, v);
  } catch (const Error&) {
    return;
  }
  list.add(pred, [b, v] { return generators::apex_extras(b, v); });
}

// Three or more extras: every triple of induced lines is concurrent or equal.
void add_many_extras(CandidateList& list, const Projective& b, std::size_t e) {
  const auto& base = b.arrangement;
  if (Integer(static_cast<unsigned long>(e + 1)) * phi_of(b) > list.cap()) return;
  const auto reps = representative_points(base, 3);
  for (const auto& r : centres(base, reps)) {
    const auto ls = lines_through(base, r, reps, 9);
    for (const auto& l : ls) {
      std::vector<IntVector> v;
      for (std::size_t i = 0; i < e; ++i) v.push_back(l.scaled(static_cast<unsigned long>(i)));
      add_apex_set(list, b, v);
    }
    for (std::size_t a = 0; a < ls.size(); ++a) {
      for (std::size_t c = a + 1; c < ls.size(); ++c) {
        for (std::size_t t = c + 1; t < ls.size(); ++t) {
          // D l3 = X l1 + Y l2 on a nonzero coordinate of l1 x l2.
          const IntVector w = cross(ls[a], ls[c]);
          std::size_t i = 0;
          while (w[i] == 0) ++i;
          const Integer x = cross(ls[t], ls[c])[i];
          const Integer y = cross(ls[a], ls[t])[i];
          const IntVector u1 = ls[a].scaled(x);
          const IntVector u2 = (-ls[c]).scaled(y);
          auto at = [&](long p, long q) {
            IntVector z(3);
            for (std::size_t k = 0; k < 3; ++k) z[k] = u1[k] * p + u2[k] * q;
            return z;
          };
          if (e == 3) {
            add_apex_set(list, b, {at(0, 0), at(1, 0), at(0, 1)});
          } else {
            const std::vector<std::vector<std::pair<long, long>>> patterns = {
                {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {2, 0}, {2, 1}},
                {{0, 0}, {1, 0}, {2, 0}, {0, 1}, {3, 0}, {4, 0}},
                {{0, 0}, {1, 0}, {0, 1}, {-1, -1}, {2, 2}, {-2, 1}},
            };
            for (const auto& pat : patterns) {
              std::vector<IntVector> v;
              for (std::size_t k = 0; k < e; ++k) v.push_back(at(pat[k].first, pat[k].second));
              add_apex_set(list, b, v);
            }
          }
        }
      }
    }
  }
}

void collect_projective(CandidateList& list, std::size_t n, std::size_t d, const SearchOptions& options);

void collect_plane(CandidateList& list, std::size_t n) {
  for (const auto& p : plane_recipes(n)) list.add(phi_of(p), [p] { return p; });
}

void collect_space(CandidateList& list, std::size_t n) {
  // One extra: a cone doubles the base count.
  for (const auto& b : plane_recipes(n - 1)) {
    list.add(2 * phi_of(b), [b] { return generators::cone(b, 1); });
  }
  if (n >= 7) {
    for (const auto& b : plane_recipes(n - 2)) add_two_extras(list, b);
  }
  for (std::size_t e = 3; e <= 5 && n >= e + 3; ++e) {
    for (const auto& b : plane_recipes(n - e)) add_many_extras(list, b, e);
  }
}

void collect_higher(CandidateList& list, std::size_t n, std::size_t d, const SearchOptions& options) {
  // Cones over lower-dimensional witnesses, with one extra or a common flat of extras.
  for (std::size_t e = 1; e <= 3 && n >= d + e + 1; ++e) {
    const Integer factor = static_cast<unsigned long>(e + 1);
    SearchOptions sub = options;
    sub.cap = list.cap() / factor;
    const SpectrumReport lower = search_projective(n - e, d - 1, sub);
    for (const auto& [f, recipe] : lower.found) {
      if (factor * f > list.cap()) continue;
      if (e == 1) {
        list.add(2 * f, [recipe] { return generators::cone(generators::realize_projective(recipe), 1); });
      } else {
        list.add(factor * f, [recipe, e] {
          return generators::cone(generators::realize_projective(recipe), e, generators::Placement::CommonFlat, 0);
        });
      }
    }
  }
}

void collect_projective(CandidateList& list, std::size_t n, std::size_t d, const SearchOptions& options) {
  if (d == 2) collect_plane(list, n);
  else if (d == 3) collect_space(list, n);
  else collect_higher(list, n, d, options);
}

template <typename Job>
void run_jobs(std::size_t count, bool parallel, Job job) {
  std::vector<std::exception_ptr> errors(count);
  if (parallel && omp_get_max_threads() > 1) {
#pragma omp parallel for schedule(dynamic, 1)
    for (long i = 0; i < static_cast<long>(count); ++i) {
      try {
        job(static_cast<std::size_t>(i));
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      try {
        job(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

void finish_report(SpectrumReport& report, const std::set<Integer>& counted) {
  const auto& c = report.context;
  report.predicted = predicted_values(report.rule, c.n, c.d, report.cap);
  for (const auto& f : report.predicted) {
    if (!report.found.contains(f)) report.missing_predicted.push_back(f);
  }
  for (const auto& f : counted) {
    if (f <= report.cap && !predicted_member(report.rule, c.n, c.d, f)) report.unexpected.push_back(f);
  }
}

}  // namespace

SpectrumReport search_projective(std::size_t n, std::size_t d, const SearchOptions& options) {
  if (d < 2 || n < d + 2) throw Error(ErrorCode::InvalidArgument, "projective search needs d >= 2 and n >= d+2");
  SpectrumReport report;
  report.context = Context{n, d, Space::Projective};
  report.rule = membership_rule(Space::Projective, n, d);
  report.cap = options.cap ? *options.cap : default_cap(Space::Projective, n, d);

  CandidateList list(report.cap);
  collect_projective(list, n, d, options);
  report.candidates = list.items().size();

  // One exact count per distinct predicted value, in candidate order.
  std::vector<const Candidate*> scheduled;
  std::set<Integer> seen;
  for (const auto& c : list.items()) {
    if (seen.contains(c.predicted)) continue;
    if (scheduled.size() >= options.budget) {
      report.partial = true;
      break;
    }
    seen.insert(c.predicted);
    scheduled.push_back(&c);
  }

  std::vector<Projective> built(scheduled.size());
  std::vector<Integer> counts(scheduled.size());
  run_jobs(scheduled.size(), options.parallel, [&](std::size_t i) {
    built[i] = scheduled[i]->build();
    counts[i] = projarr::count_regions_projective(built[i].arrangement);
    if (counts[i] != scheduled[i]->predicted) {
      throw std::logic_error("recipe " + built[i].recipe.str() + " predicted " + scheduled[i]->predicted.get_str() +
                             " but counts " + counts[i].get_str());
    }
  });
  report.counted = scheduled.size();

  std::set<Integer> counted;
  for (std::size_t i = 0; i < scheduled.size(); ++i) {
    counted.insert(counts[i]);
    report.found.emplace(counts[i], built[i].recipe);
  }
  finish_report(report, counted);
  return report;
}

SpectrumReport search_toric(std::size_t n, std::size_t d, const SearchOptions& options) {
  if (n < 2 || d < 2) throw Error(ErrorCode::InvalidArgument, "toric search needs n >= 2 and d >= 2");
  SpectrumReport report;
  report.context = Context{n, d, Space::Toric};
  report.rule = "toric";
  report.cap = options.cap ? *options.cap : default_cap(Space::Toric, n, d);

  std::vector<std::function<Toric()>> jobs;
  std::set<Integer> expected_seen;
  auto add_expected = [&](const Integer& f, std::function<Toric()> job) {
    if (f > report.cap || !expected_seen.insert(f).second) return;
    jobs.push_back(std::move(job));
  };
  for (std::size_t k = 0; k < d && k < n; ++k) {
    add_expected(Integer(static_cast<unsigned long>(n - k)), [=] { return generators::toric_construction_a(n, d, k); });
  }
  if (n >= d + 1) {
    for (std::size_t slope = 0; slope <= options.budget && 2 * (n - d) + slope <= report.cap; ++slope) {
      add_expected(Integer(static_cast<unsigned long>(2 * (n - d) + slope)),
                   [=] { return generators::toric_construction_b(n, d, slope); });
    }
  } else {
    for (std::size_t slope = 1; slope <= options.budget && slope <= report.cap; ++slope) {
      add_expected(Integer(static_cast<unsigned long>(slope)), [=] { return generators::toric_slope_pair(n, d, slope); });
    }
  }

  // Mixed coordinate and slope subtori with offsets 0 and 1/2.
  std::vector<toric::Subtorus> catalog;
  std::vector<IntVector> normals;
  if (d == 2) {
    normals = {IntVector{1, 0}, IntVector{0, 1}, IntVector{1, 1}, IntVector{1, -1}, IntVector{1, 2}, IntVector{2, 1}};
  } else if (d == 3) {
    normals = {IntVector{1, 0, 0}, IntVector{0, 1, 0}, IntVector{0, 0, 1}, IntVector{1, 1, 0}, IntVector{0, 1, 1},
               IntVector{1, 0, 1}, IntVector{1, -1, 0}};
  }
  for (const auto& a : normals) {
    catalog.push_back(toric::Subtorus::make(a, 0));
    catalog.push_back(toric::Subtorus::make(a, Rational(1, 2)));
  }
  if (n <= catalog.size()) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    while (true) {
      if (jobs.size() >= options.budget) {
        report.partial = true;
        break;
      }
      std::vector<toric::Subtorus> subs;
      for (auto i : idx) subs.push_back(catalog[i]);
      const auto arr = toric::ToricArrangement::make(d, subs);
      if (toric::lift_to_cube(arr).size() <= toric::kMaxLiftedHyperplanes) {
        jobs.push_back([=] { return generators::toric_explicit(d, subs, "mixed"); });
      }
      std::size_t i = n;
      while (i > 0 && idx[i - 1] == catalog.size() - n + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  if (jobs.size() > options.budget) {
    jobs.resize(options.budget);
    report.partial = true;
  }
  report.candidates = jobs.size();

  std::vector<Toric> built(jobs.size());
  std::vector<Integer> counts(jobs.size());
  run_jobs(jobs.size(), options.parallel, [&](std::size_t i) {
    built[i] = jobs[i]();
    counts[i] = toric::count_regions_toric(built[i].arrangement);
    if (built[i].recipe.expected_f && *built[i].recipe.expected_f != counts[i]) {
      throw std::logic_error("recipe " + built[i].recipe.str() + " expected " + built[i].recipe.expected_f->get_str() +
                             " but counts " + counts[i].get_str());
    }
  });
  report.counted = jobs.size();

  std::set<Integer> counted;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    counted.insert(counts[i]);
    report.found.emplace(counts[i], built[i].recipe);
  }
  finish_report(report, counted);
  return report;
}

namespace {

void check(std::vector<BoundViolation>& out, const std::string& label, const std::string& name,
           const bounds::BoundValue& b, const Integer& f) {
  if (f < b.ceil) out.push_back(BoundViolation{label, name, b.value, b.ceil, f});
}

}  // namespace

std::vector<BoundViolation> check_bounds(const ProjectiveSample& s) {
  std::vector<BoundViolation> out;
  const std::size_t n = s.arrangement.size();
  const std::size_t d = s.arrangement.d();
  const std::size_t m = projarr::max_point_multiplicity(s.arrangement).m;
  check(out, s.label, "homological", bounds::bound_homological(n, bounds::ManifoldDescriptor::projective_space(d)), s.f);
  check(out, s.label, "lemma3", bounds::bound_lemma3(n, d, m), s.f);
  if (d >= 2) check(out, s.label, "lemma4", bounds::bound_lemma4(n, d, m), s.f);
  check(out, s.label, "lemma6", bounds::bound_lemma6(n, d, m), s.f);
  if (n >= d + 1) check(out, s.label, "mcmullen", bounds::bound_mcmullen(n, d), s.f);
  return out;
}

std::vector<BoundViolation> check_bounds(const ToricSample& s) {
  std::vector<BoundViolation> out;
  check(out, s.label, "homological",
        bounds::bound_homological(s.arrangement.size(), bounds::ManifoldDescriptor::torus(s.arrangement.d())), s.f);
  return out;
}

std::vector<BoundViolation> verify_bounds_batch(const std::vector<ProjectiveSample>& projective,
                                                const std::vector<ToricSample>& toric) {
  std::vector<BoundViolation> out;
  for (const auto& s : projective) {
    auto v = check_bounds(s);
    out.insert(out.end(), v.begin(), v.end());
  }
  for (const auto& s : toric) {
    auto v = check_bounds(s);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

std::vector<ProjArrangement> random_arrangements(std::size_t count, std::uint64_t seed, std::size_t max_n) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> entry(-2, 2);
  std::uniform_int_distribution<std::size_t> dim(2, 4);
  std::vector<ProjArrangement> out;
  while (out.size() < count) {
    const std::size_t d = dim(rng);
    if (max_n < d + 1) continue;
    std::uniform_int_distribution<std::size_t> size(d + 1, max_n);
    const std::size_t n = size(rng);
    std::vector<IntVector> cs;
    for (std::size_t i = 0; i < n; ++i) {
      IntVector v(d + 1);
      for (std::size_t k = 0; k <= d; ++k) v[k] = entry(rng);
      cs.push_back(std::move(v));
    }
    try {
      out.push_back(ProjArrangement::make(d, std::move(cs)));
    } catch (const Error&) {
      // Zero, repeated or rank-deficient draws are redrawn.
    }
  }
  return out;
}

}  // namespace arrcount::spectrum
