#include "arrcount/cli.hpp"

#include "CLI11.hpp"

#include <omp.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <stdexcept>

#include "arrcount/acceptance.hpp"
#include "arrcount/bounds.hpp"
#include "arrcount/generators.hpp"
#include "arrcount/io.hpp"
#include "arrcount/projarr.hpp"
#include "arrcount/signoracle.hpp"
#include "arrcount/spectrum.hpp"
#include "arrcount/toric.hpp"

namespace arrcount::cli {

namespace {

using io::Json;

Json integer_array(const std::vector<Integer>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(io::integer_json(x));
  return a;
}

template <class Set>
Json integer_array(const Set& s) {
  return integer_array(std::vector<Integer>(s.begin(), s.end()));
}

Integer count_file(const io::ArrangementFile& file, const std::string& engine) {
  if (file.is_toric()) {
    const auto& arr = std::get<toric::ToricArrangement>(file.arrangement);
    if (engine == "grid") return toric::count_regions_toric_grid_stable(arr).f;
    return toric::count_regions_toric(arr);
  }
  const auto& arr = std::get<projarr::ProjArrangement>(file.arrangement);
  if (engine == "oracle") return signoracle::count_regions_oracle(arr);
  if (engine == "grid") throw Error(ErrorCode::InvalidArgument, "the grid engine only counts toric arrangements");
  return projarr::count_regions_projective(arr);
}

struct CountArgs {
  std::string file;
  std::string engine = "zaslavsky";
};

struct BoundsArgs {
  std::size_t n = 0, d = 0, m = 0;
  std::string format = "table";
};

struct SpectrumArgs {
  bool theorem4 = false, theorem5 = false, toric = false, martinov = false;
  std::size_t n = 0, d = 0;
  std::optional<std::string> cap;
};

struct GenArgs {
  std::string family;
  std::vector<std::string> params;
  std::string base;
  std::string output;
  bool expect = false;
};

struct SearchArgs {
  std::string space = "projective";
  std::size_t n = 0, d = 0;
  std::string cap = "auto";
  std::size_t budget = spectrum::SearchOptions{}.budget;
  std::string json, csv;
  bool serial = false;
};

std::size_t to_size(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const unsigned long v = std::stoul(s, &pos);
    if (pos == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, what + " must be a non-negative integer, got " + s);
}

Integer to_integer(const std::string& s, const std::string& what) {
  Integer v;
  if (s.empty() || v.set_str(s, 10) != 0 || v < 0) throw Error(ErrorCode::InvalidArgument, what + " must be a non-negative integer");
  return v;
}

int run_count(const CountArgs& a, std::ostream& out) {
  const auto file = io::read_arrangement(a.file);
  out << Json{{"f", io::integer_json(count_file(file, a.engine))}}.dump() << '\n';
  return kExitOk;
}

int run_bounds(const BoundsArgs& a, std::ostream& out, std::ostream& err) {
  using bounds::BoundValue;
  std::vector<std::pair<std::string, std::function<BoundValue()>>> rows = {
      {"homological", [&] { return bounds::bound_homological(a.n, bounds::ManifoldDescriptor::projective_space(a.d)); }},
      {"lemma3", [&] { return bounds::bound_lemma3(a.n, a.d, a.m); }},
      {"lemma4", [&] { return bounds::bound_lemma4(a.n, a.d, a.m); }},
      {"lemma6", [&] { return bounds::bound_lemma6(a.n, a.d, a.m); }},
      {"mcmullen", [&] { return bounds::bound_mcmullen(a.n, a.d); }},
  };
  Json table = Json::array();
  std::string text;
  for (const auto& [name, eval] : rows) {
    try {
      const BoundValue b = eval();
      table.push_back(Json{{"name", name}, {"value", b.value.str()}, {"ceil", io::integer_json(b.ceil)}});
      text += name + " " + b.value.str() + " " + b.ceil.get_str() + "\n";
    } catch (const Error& e) {
      err << name << ": " << e.what() << '\n';
    }
  }
  if (a.format == "json") out << table.dump() << '\n';
  else out << text;
  return kExitOk;
}

int run_spectrum(const SpectrumArgs& a, std::ostream& out) {
  const int chosen = a.theorem4 + a.theorem5 + a.toric + a.martinov;
  if (chosen != 1) throw Error(ErrorCode::InvalidArgument, "choose exactly one of --theorem4, --theorem5, --toric, --martinov");
  Json values;
  if (a.theorem4) {
    values = integer_array(bounds::spectrum_theorem4(a.n, a.d).values);
  } else if (a.theorem5) {
    values = integer_array(bounds::spectrum_theorem5(a.n));
  } else if (a.martinov) {
    values = integer_array(bounds::martinov_subset(a.n));
  } else {
    const Integer cap = a.cap && *a.cap != "auto" ? to_integer(*a.cap, "--cap")
                                                  : spectrum::default_cap(spectrum::Space::Toric, a.n, a.d);
    values = integer_array(bounds::toric_predicted(a.n, a.d, cap));
  }
  out << values.dump() << '\n';
  return kExitOk;
}

generators::Recipe base_recipe(const std::string& path) {
  const auto file = io::read_arrangement(path);
  if (!file.recipe) throw Error(ErrorCode::ParseError, path + " carries no recipe to build on");
  return *file.recipe;
}

io::ArrangementFile generate(const GenArgs& a) {
  generators::Recipe r;
  r.family = a.family;
  for (const auto& p : a.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::InvalidArgument, "parameter " + p + " is not key=value");
    r.params.emplace_back(p.substr(0, eq), p.substr(eq + 1));
  }
  if (!a.base.empty()) r.inputs.push_back(base_recipe(a.base));

  io::ArrangementFile file;
  if (generators::is_toric_family(r.family)) {
    auto t = generators::realize_toric(r);
    file.arrangement = std::move(t.arrangement);
    file.recipe = std::move(t.recipe);
    return file;
  }
  generators::Projective p;
  if (r.family == "two_extra_planes" && r.param("l").empty()) {
    // Automatic placement of the second plane.
    if (r.inputs.size() != 1) throw Error(ErrorCode::InvalidArgument, "two_extra_planes needs --base");
    const auto base = generators::realize_projective(r.inputs[0]);
    const std::string k = r.param("coincidences");
    p = generators::two_extra_planes(base.arrangement.size() + 2, base, k.empty() ? 0 : to_size(k, "coincidences"),
                                     r.param("in_union") == "1");
  } else {
    p = generators::realize_projective(r);
  }
  file.arrangement = std::move(p.arrangement);
  file.recipe = std::move(p.recipe);
  return file;
}

int run_gen(const GenArgs& a, std::ostream& out, std::ostream& err) {
  const auto file = generate(a);
  const Json j = io::arrangement_file_json(file);
  Json summary{{"recipe", file.recipe->str()}};
  if (file.recipe->expected_f) summary["expected_f"] = io::integer_json(*file.recipe->expected_f);
  if (a.expect) {
    if (!file.recipe->expected_f) throw Error(ErrorCode::InvalidArgument, a.family + " has no expected count");
    const Integer f = count_file(file, "exact");
    summary["f"] = io::integer_json(f);
    if (f != *file.recipe->expected_f) {
      err << "count " << f << " differs from expected " << *file.recipe->expected_f << '\n';
      return kExitViolation;
    }
  }
  if (a.output.empty()) {
    out << j.dump(2) << '\n';
  } else {
    io::write_json(a.output, j);
    summary["written"] = a.output;
    out << summary.dump() << '\n';
  }
  return kExitOk;
}

int run_search(const SearchArgs& a, std::ostream& out, std::ostream& err) {
  spectrum::SearchOptions opt;
  opt.budget = a.budget;
  opt.parallel = !a.serial;
  if (a.cap != "auto") opt.cap = to_integer(a.cap, "--cap");
  spectrum::SpectrumReport report;
  if (a.space == "projective") report = spectrum::search_projective(a.n, a.d, opt);
  else if (a.space == "toric") report = spectrum::search_toric(a.n, a.d, opt);
  else throw Error(ErrorCode::InvalidArgument, "unknown space " + a.space);

  const Json j = io::to_json(report);
  if (!a.json.empty()) io::write_json(a.json, j);
  if (!a.csv.empty()) {
    std::ofstream csv(a.csv);
    if (!csv) throw Error(ErrorCode::ParseError, "cannot write " + a.csv);
    csv << io::report_csv(report);
  }
  if (!report.unexpected.empty()) {
    err << report.unexpected.size() << " realized value(s) outside the predicted set\n";
    out << j.dump(2) << '\n';
    return kExitViolation;
  }
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_acceptance(std::uint64_t seed, bool serial, std::ostream& out) {
  acceptance::Options opt;
  opt.seed = seed;
  opt.parallel = !serial;
  const auto results = acceptance::run(opt, &out);
  return acceptance::all_blocking_passed(results) ? kExitOk : kExitViolation;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Region counts of projective and toric arrangements", "arrcount"};
  app.require_subcommand(1);
  app.fallthrough();

  int threads = 0;
  std::uint64_t seed = acceptance::kDefaultSeed;
  app.add_option("--threads", threads, "Maximum worker threads (0 keeps the OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "Seed of the random arrangement stream");

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count regions of an arrangement file");
  c->add_option("file", count.file, "Arrangement JSON")->required();
  c->add_option("--engine", count.engine)->check(CLI::IsMember({"zaslavsky", "oracle", "grid", "exact"}));

  BoundsArgs bnd;
  auto* b = app.add_subcommand("bounds", "Evaluate the lower bounds for n hyperplanes in RP^d with multiplicity m");
  b->add_option("-n", bnd.n)->required();
  b->add_option("-d", bnd.d)->required();
  b->add_option("-m", bnd.m)->required();
  b->add_option("--format", bnd.format)->check(CLI::IsMember({"table", "json"}));

  SpectrumArgs spec;
  auto* s = app.add_subcommand("spectrum", "Print a predicted set of region counts");
  s->add_flag("--theorem4", spec.theorem4, "Four smallest counts for d >= 3, n >= 2d+5");
  s->add_flag("--theorem5", spec.theorem5, "Counts below 12n-60 for d = 3, n >= 50");
  s->add_flag("--toric", spec.toric, "Toric counts up to --cap");
  s->add_flag("--martinov", spec.martinov, "Line arrangement counts up to 4n-12");
  s->add_option("-n", spec.n)->required();
  s->add_option("-d", spec.d);
  s->add_option("--cap", spec.cap);

  GenArgs gen;
  auto* g = app.add_subcommand("gen", "Build an arrangement from a generator family");
  g->add_option("family", gen.family)->required();
  g->add_option("params", gen.params, "key=value parameters");
  g->add_option("--base", gen.base, "Arrangement file whose recipe is the input");
  g->add_option("-o,--output", gen.output);
  g->add_flag("--expect", gen.expect, "Fail unless the exact count equals the expected one");

  SearchArgs search;
  auto* se = app.add_subcommand("search", "Search generator recipes for realizable counts");
  se->add_option("--space", search.space)->check(CLI::IsMember({"projective", "toric"}));
  se->add_option("-n", search.n)->required();
  se->add_option("-d", search.d)->required();
  se->add_option("--cap", search.cap, "auto or an integer");
  se->add_option("--budget", search.budget, "Maximum number of exact counts");
  se->add_option("--json", search.json);
  se->add_option("--csv", search.csv);
  se->add_flag("--serial", search.serial);

  bool acc_serial = false;
  auto* acc = app.add_subcommand("verify-acceptance", "Run the acceptance battery");
  acc->add_flag("--serial", acc_serial);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (threads > 0) omp_set_num_threads(threads);

  try {
    if (c->parsed()) return run_count(count, out);
    if (b->parsed()) return run_bounds(bnd, out, err);
    if (s->parsed()) return run_spectrum(spec, out);
    if (g->parsed()) return run_gen(gen, out, err);
    if (se->parsed()) return run_search(search, out, err);
    if (acc->parsed()) return run_acceptance(seed, acc_serial, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {
    err << "violation: " << e.what() << '\n';
    return kExitViolation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace arrcount::cli
