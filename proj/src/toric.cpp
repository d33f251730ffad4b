#include "arrcount/toric.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "arrcount/disjoint_sets.hpp"

namespace arrcount::toric {

Subtorus Subtorus::make(const IntVector& normal, const Rational& offset) {
  if (normal.is_zero()) throw Error(ErrorCode::ZeroVector, "subtorus normal must be nonzero");
  Integer g = 0;
  for (std::size_t i = 0; i < normal.dim(); ++i) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), normal[i].get_mpz_t());
  IntVector a = primitive_scale(normal);
  Rational c = offset / Rational(g);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] != 0) {
      if (a[i] < 0) {
        a = -a;
        c = -c;
      }
      break;
    }
  }
  Subtorus s;
  s.normal_ = std::move(a);
  s.offset_ = c.frac();
  return s;
}

ToricArrangement ToricArrangement::make(std::size_t d, std::vector<Subtorus> subtori) {
  if (d < 1) throw Error(ErrorCode::InvalidArgument, "torus dimension must be >= 1");
  if (subtori.empty()) throw Error(ErrorCode::InvalidArgument, "need at least one subtorus");
  for (const auto& s : subtori) {
    if (s.dim() != d) throw Error(ErrorCode::InvalidArgument, "subtorus normal has wrong dimension");
  }
  std::vector<Subtorus> sorted = subtori;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] == sorted[i - 1]) {
      throw Error(ErrorCode::DuplicateSubtorus,
                  "normal " + sorted[i].normal().str() + " offset " + sorted[i].offset().str());
    }
  }
  ToricArrangement a;
  a.d_ = d;
  a.subtori_ = std::move(subtori);
  return a;
}

std::vector<AffineHyperplane> lift_to_cube(const ToricArrangement& arr) {
  std::vector<AffineHyperplane> out;
  for (std::size_t s = 0; s < arr.size(); ++s) {
    const auto& st = arr.subtori()[s];
    Integer lo = 0, hi = 0;
    for (std::size_t i = 0; i < st.dim(); ++i) {
      if (st.normal()[i] < 0) lo += st.normal()[i];
      else hi += st.normal()[i];
    }
    const Integer t_min = (Rational(lo) - st.offset()).ceil();
    const Integer t_max = (Rational(hi) - st.offset()).floor();
    for (Integer t = t_min; t <= t_max; ++t) out.push_back(AffineHyperplane{st.normal(), st.offset() + Rational(t), s});
  }
  return out;
}

namespace {

// a·x - b x_0 over homogeneous coordinates (x_1, ..., x_d, x_0), integer-scaled.
IntVector homogeneous_row(const AffineHyperplane& h) {
  const std::size_t d = h.normal.dim();
  IntVector row(d + 1);
  const Integer q = h.offset.den();
  for (std::size_t i = 0; i < d; ++i) row[i] = h.normal[i] * q;
  row[d] = -h.offset.num();
  return row;
}

// x_i > 0 and x_0 - x_i > 0 for every kept coordinate.
std::vector<IntVector> open_cube_rows(std::size_t coords) {
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < coords; ++i) {
    rows.push_back(unit_vector(coords + 1, i));
    IntVector r(coords + 1);
    r[i] = -1;
    r[coords] = 1;
    rows.push_back(std::move(r));
  }
  return rows;
}

int side(const AffineHyperplane& h, const std::vector<Rational>& x) {
  Rational v = -h.offset;
  for (std::size_t i = 0; i < x.size(); ++i) v += Rational(h.normal[i]) * x[i];
  return v.sign();
}

void check_guard(const ToricArrangement& arr, std::size_t lifted) {
  if (arr.d() < 2 || arr.d() > kMaxTorusDim) {
    throw Error(ErrorCode::TooLarge, "torus dimension " + std::to_string(arr.d()) + " outside 2.." +
                                         std::to_string(kMaxTorusDim));
  }
  if (lifted > kMaxLiftedHyperplanes) {
    throw Error(ErrorCode::TooLarge, std::to_string(lifted) + " lifted hyperplanes exceed the guard of " +
                                         std::to_string(kMaxLiftedHyperplanes));
  }
}

}  // namespace

TorusRegionDecomposition decompose(const ToricArrangement& arr) {
  const std::size_t d = arr.d();
  TorusRegionDecomposition dec;
  dec.lifted = lift_to_cube(arr);
  check_guard(arr, dec.lifted.size());

  std::vector<IntVector> rows;
  for (const auto& h : dec.lifted) rows.push_back(homogeneous_row(h));
  dec.cells = signoracle::enumerate_cells(open_cube_rows(d), rows, d + 1);

  std::map<signoracle::SignVector, std::uint32_t> index;
  for (std::size_t c = 0; c < dec.cells.size(); ++c) index.emplace(dec.cells[c].signs, static_cast<std::uint32_t>(c));

  DisjointSets classes(dec.cells.size());
  for (std::size_t axis = 0; axis < d; ++axis) {
    const bool facet_on_subtorus = std::any_of(arr.subtori().begin(), arr.subtori().end(), [&](const Subtorus& s) {
      return s.normal() == unit_vector(d, axis) && s.offset() == Rational(0);
    });
    if (facet_on_subtorus) continue;

    // Induced arrangement on the open facet x_axis = 0; its translate by e_axis
    // is the induced arrangement on x_axis = 1.
    std::vector<IntVector> facet_rows;
    for (const auto& row : rows) {
      IntVector r(d);
      for (std::size_t i = 0, k = 0; i <= d; ++i) {
        if (i != axis) r[k++] = row[i];
      }
      facet_rows.push_back(std::move(r));
    }
    const auto facet_cells = signoracle::enumerate_cells(open_cube_rows(d - 1), facet_rows, d);
    dec.facet_cells += facet_cells.size();

    for (const auto& fc : facet_cells) {
      const Integer& w0 = fc.witness[d - 1];
      std::vector<Rational> p(d, Rational(0));
      for (std::size_t i = 0, k = 0; i < d; ++i) {
        if (i != axis) p[i] = Rational(fc.witness[k++], w0);
      }

      // Half the smallest distance along e_axis to a lifted hyperplane, from either facet.
      Rational eps(1, 2);
      for (const auto& h : dec.lifted) {
        const Integer& ai = h.normal[axis];
        if (ai == 0) continue;
        Rational ap = 0;
        for (std::size_t i = 0; i < d; ++i) ap += Rational(h.normal[i]) * p[i];
        const Rational t_in = (h.offset - ap) / Rational(ai);
        const Rational t_out = (ap + Rational(ai) - h.offset) / Rational(ai);
        for (const auto& t : {t_in, t_out}) {
          if (t.sign() > 0 && t / Rational(2) < eps) eps = t / Rational(2);
        }
      }

      std::vector<Rational> q_in = p, q_out = p;
      q_in[axis] = eps;
      q_out[axis] = Rational(1) - eps;
      signoracle::SignVector s_in, s_out;
      for (const auto& h : dec.lifted) {
        const int a = side(h, q_in);
        const int b = side(h, q_out);
        if (a == 0 || b == 0) throw std::logic_error("facet step landed on a lifted hyperplane");
        s_in.push_back(static_cast<std::int8_t>(a));
        s_out.push_back(static_cast<std::int8_t>(b));
      }
      const auto in = index.find(s_in);
      const auto out = index.find(s_out);
      if (in == index.end() || out == index.end()) throw std::logic_error("facet neighbour is not a cube cell");
      classes.unite(in->second, out->second);
    }
  }

  std::map<std::uint32_t, std::size_t> label;
  dec.cell_class.resize(dec.cells.size());
  for (std::size_t c = 0; c < dec.cells.size(); ++c) {
    const auto root = classes.find(static_cast<std::uint32_t>(c));
    dec.cell_class[c] = label.emplace(root, label.size()).first->second;
  }
  dec.f = Integer(static_cast<unsigned long>(classes.components()));
  return dec;
}

Integer count_regions_toric(const ToricArrangement& arr) { return decompose(arr).f; }

namespace {

constexpr std::size_t kMaxGridSamples = 60'000'000;

struct GridSubtorus {
  std::int64_t base;                // numerator at j = 0
  std::vector<std::int64_t> step;   // numerator change per unit step along each axis
};

// Solves G x = e over the rationals for symmetric positive definite G.
std::vector<Rational> solve(std::vector<std::vector<Rational>> g, std::vector<Rational> rhs) {
  const std::size_t k = g.size();
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = c;
    while (g[p][c] == 0) ++p;
    std::swap(g[p], g[c]);
    std::swap(rhs[p], rhs[c]);
    for (std::size_t r = 0; r < k; ++r) {
      if (r == c || g[r][c] == 0) continue;
      const Rational f = g[r][c] / g[c][c];
      for (std::size_t j = c; j < k; ++j) g[r][j] -= f * g[c][j];
      rhs[r] -= f * rhs[c];
    }
  }
  for (std::size_t r = 0; r < k; ++r) rhs[r] /= g[r][r];
  return rhs;
}

// Neighbour offsets of the sample graph, one per +- pair: the axis steps, and
// for every independent set S of at most d normals and every sign pattern, a
// lattice direction w with sign(a_s . w) = sigma_s. The latter point into each
// wedge of the tangent cones at intersections, which axis steps can miss at
// every refinement.
std::vector<std::vector<long>> grid_steps(const std::vector<IntVector>& normals, std::size_t d) {
  std::set<IntVector> seen;
  std::vector<std::vector<long>> out;
  auto add = [&](const IntVector& w) {
    if (w.is_zero() || !seen.insert(primitive_normalize(w)).second) return;
    std::vector<long> v;
    const IntVector scaled = primitive_scale(w);
    for (const auto& x : scaled.entries()) {
      if (!x.fits_slong_p()) return;
      v.push_back(x.get_si());
    }
    out.push_back(std::move(v));
  };
  for (std::size_t i = 0; i < d; ++i) add(unit_vector(d, i));

  const std::size_t m = normals.size();
  std::vector<std::size_t> subset;
  auto visit = [&](auto&& self, std::size_t from) -> void {
    if (subset.size() >= 2) {
      std::vector<IntVector> rows;
      for (auto i : subset) rows.push_back(normals[i]);
      if (rank(rows, d) != rows.size()) return;  // supersets stay dependent
      const std::size_t k = rows.size();
      std::vector<std::vector<Rational>> gram(k, std::vector<Rational>(k));
      for (std::size_t a = 0; a < k; ++a) {
        for (std::size_t b = 0; b < k; ++b) gram[a][b] = Rational(dot(rows[a], rows[b]));
      }
      // Dual vectors w_s = A^T G^{-1} e_s, so a_t . w_s = delta_ts.
      std::vector<std::vector<Rational>> dual;
      for (std::size_t t = 0; t < k; ++t) {
        std::vector<Rational> e(k, Rational(0));
        e[t] = 1;
        const auto y = solve(gram, e);
        std::vector<Rational> w(d, Rational(0));
        for (std::size_t a = 0; a < k; ++a) {
          for (std::size_t i = 0; i < d; ++i) w[i] += y[a] * Rational(rows[a][i]);
        }
        dual.push_back(std::move(w));
      }
      for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << (k - 1)); ++pattern) {
        std::vector<Rational> w(d, Rational(0));
        for (std::size_t t = 0; t < k; ++t) {
          const bool neg = t > 0 && ((pattern >> (t - 1)) & 1);
          for (std::size_t i = 0; i < d; ++i) w[i] += neg ? -dual[t][i] : dual[t][i];
        }
        Integer l = 1;
        for (const auto& x : w) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        IntVector iw(d);
        for (std::size_t i = 0; i < d; ++i) iw[i] = (w[i] * Rational(l)).num();
        add(iw);
      }
    }
    if (subset.size() == d) return;
    for (std::size_t i = from; i < m; ++i) {
      subset.push_back(i);
      self(self, i + 1);
      subset.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

}  // namespace

Integer grid_components(const ToricArrangement& arr, std::size_t refinement) {
  if (refinement < 1) throw Error(ErrorCode::InvalidArgument, "refinement must be >= 1");
  const std::size_t d = arr.d();
  if (d < 1 || d > kMaxTorusDim) throw Error(ErrorCode::TooLarge, "torus dimension out of range");

  Integer q = 1;
  Integer max_abs = 1;
  for (const auto& s : arr.subtori()) {
    mpz_lcm(q.get_mpz_t(), q.get_mpz_t(), s.offset().den().get_mpz_t());
    for (std::size_t i = 0; i < d; ++i) {
      if (abs(s.normal()[i]) > max_abs) max_abs = abs(s.normal()[i]);
    }
  }
  const Integer n_big = q * max_abs * static_cast<unsigned long>(refinement);
  Integer samples = 1;
  for (std::size_t i = 0; i < d; ++i) samples *= n_big;
  if (samples > static_cast<unsigned long>(kMaxGridSamples)) {
    throw Error(ErrorCode::TooLarge, "grid of " + samples.get_str() + " samples");
  }

  // Samples sit at cell centres (j + 1/2)/N, perturbed by K^i/(2NP): the half
  // pitch breaks alignment with offsets and slopes, and a·(K^i) is nonzero and
  // below the prime P, so no sample lies on a subtorus.
  const Integer k_base = 2 * max_abs + 1;
  std::vector<Integer> shift_num(d);
  Integer power = 1;
  Integer bound = k_base;
  for (std::size_t i = 0; i < d; ++i) {
    shift_num[i] = power;
    power *= k_base;
  }
  bound = power;
  for (const auto& s : arr.subtori()) {
    if (s.offset().den() > bound) bound = s.offset().den();
  }
  Integer prime;
  mpz_nextprime(prime.get_mpz_t(), bound.get_mpz_t());

  std::vector<GridSubtorus> subs;
  const Integer den_common_factor = 2 * n_big * prime;
  std::vector<Integer> dens;
  for (const auto& s : arr.subtori()) {
    const Integer cden = s.offset().den();
    const Integer den = den_common_factor * cden;
    Integer base = 0;
    for (std::size_t i = 0; i < d; ++i) base += s.normal()[i] * (prime + shift_num[i]);
    base = base * cden - s.offset().num() * den_common_factor;
    GridSubtorus g;
    if (!den.fits_slong_p() || den > Integer(std::numeric_limits<std::int64_t>::max() / 8) || !base.fits_slong_p()) {
      throw Error(ErrorCode::TooLarge, "grid arithmetic exceeds 64 bits");
    }
    g.base = base.get_si();
    for (std::size_t i = 0; i < d; ++i) g.step.push_back(Integer(2 * s.normal()[i] * prime * cden).get_si());
    subs.push_back(std::move(g));
    dens.push_back(den);
  }
  std::vector<std::int64_t> den64;
  for (const auto& x : dens) den64.push_back(x.get_si());

  std::vector<IntVector> normals;
  for (const auto& s : arr.subtori()) {
    if (std::find(normals.begin(), normals.end(), s.normal()) == normals.end()) normals.push_back(s.normal());
  }
  const auto steps = grid_steps(normals, d);

  const std::size_t side_len = n_big.get_ui();
  const std::size_t total = samples.get_ui();
  std::vector<std::size_t> stride(d, 1);
  for (std::size_t i = 1; i < d; ++i) stride[i] = stride[i - 1] * side_len;

  // delta[w][s]: change of subtorus s's remainder along step w.
  std::vector<std::vector<__int128>> delta(steps.size(), std::vector<__int128>(subs.size(), 0));
  for (std::size_t w = 0; w < steps.size(); ++w) {
    for (std::size_t t = 0; t < subs.size(); ++t) {
      for (std::size_t i = 0; i < d; ++i) delta[w][t] += static_cast<__int128>(subs[t].step[i]) * steps[w][i];
    }
  }

  DisjointSets sets(total);
  std::vector<std::size_t> j(d, 0);
  std::vector<std::int64_t> rem(subs.size());
  for (std::size_t idx = 0; idx < total; ++idx) {
    for (std::size_t s = 0; s < subs.size(); ++s) {
      std::int64_t v = subs[s].base;
      for (std::size_t i = 0; i < d; ++i) v += subs[s].step[i] * static_cast<std::int64_t>(j[i]);
      v %= den64[s];
      if (v < 0) v += den64[s];
      rem[s] = v;
    }
    // A straight segment between samples that crosses no subtorus lies in one
    // region, so edges never merge distinct regions.
    for (std::size_t k = 0; k < steps.size(); ++k) {
      const auto& w = steps[k];
      bool blocked = false;
      for (std::size_t s = 0; s < subs.size() && !blocked; ++s) {
        const __int128 v = rem[s] + delta[k][s];
        blocked = v < 0 || v >= den64[s];
      }
      if (blocked) continue;
      std::size_t nb = 0;
      for (std::size_t i = 0; i < d; ++i) {
        long t = (static_cast<long>(j[i]) + w[i]) % static_cast<long>(side_len);
        if (t < 0) t += static_cast<long>(side_len);
        nb += static_cast<std::size_t>(t) * stride[i];
      }
      sets.unite(static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(nb));
    }
    for (std::size_t i = 0; i < d; ++i) {
      if (++j[i] < side_len) break;
      j[i] = 0;
    }
  }
  return Integer(static_cast<unsigned long>(sets.components()));
}

Integer count_regions_toric_grid(const ToricArrangement& arr, std::size_t refinement) {
  const Integer coarse = grid_components(arr, refinement);
  const Integer fine = grid_components(arr, 2 * refinement);
  if (coarse != fine) {
    throw Error(ErrorCode::Unstable, "grid counts " + coarse.get_str() + " at R=" + std::to_string(refinement) +
                                         " and " + fine.get_str() + " at R=" + std::to_string(2 * refinement));
  }
  return fine;
}

GridResult count_regions_toric_grid_stable(const ToricArrangement& arr, std::size_t start,
                                           std::size_t max_refinement) {
  Integer previous = grid_components(arr, start);
  for (std::size_t r = start; 2 * r <= max_refinement; r *= 2) {
    const Integer next = grid_components(arr, 2 * r);
    if (next == previous) return GridResult{next, r};
    previous = next;
  }
  throw Error(ErrorCode::Unstable, "grid count did not stabilize up to R=" + std::to_string(max_refinement));
}

}  // namespace arrcount::toric
