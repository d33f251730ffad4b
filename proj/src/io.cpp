#include "arrcount/io.hpp"

#include <fstream>
#include <sstream>

namespace arrcount::io {

namespace {

Integer parse_integer(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer v;
    const auto s = j.get<std::string>();
    if (s.empty() || v.set_str(s, 10) != 0) throw Error(ErrorCode::ParseError, "not an integer: " + s);
    return v;
  }
  throw Error(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Rational parse_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(ErrorCode::ParseError, "expected a rational, got " + j.dump());
}

IntVector parse_vector(const Json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "expected an array, got " + j.dump());
  std::vector<Integer> e;
  for (const auto& x : j) e.push_back(parse_integer(x));
  return IntVector(std::move(e));
}

Json vector_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v.entries()) a.push_back(x.get_str());
  return a;
}

std::size_t parse_dim(const Json& j) {
  if (!j.contains("d") || !j["d"].is_number_integer() || j["d"].get<long>() < 1) {
    throw Error(ErrorCode::ParseError, "missing or invalid \"d\"");
  }
  return j["d"].get<std::size_t>();
}

}  // namespace

Json integer_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json to_json(const projarr::ProjArrangement& arr) {
  Json j;
  j["type"] = "projective";
  j["d"] = arr.d();
  j["covectors"] = Json::array();
  for (const auto& c : arr.covectors()) j["covectors"].push_back(vector_json(c));
  return j;
}

Json to_json(const toric::ToricArrangement& arr) {
  Json j;
  j["type"] = "toric";
  j["d"] = arr.d();
  j["subtori"] = Json::array();
  for (const auto& s : arr.subtori()) j["subtori"].push_back(Json{{"a", vector_json(s.normal())}, {"c", s.offset().str()}});
  return j;
}

Json to_json(const generators::Recipe& recipe) {
  Json j;
  j["family"] = recipe.family;
  j["params"] = Json::array();
  for (const auto& [k, v] : recipe.params) j["params"].push_back(Json::array({k, v}));
  if (!recipe.inputs.empty()) {
    j["inputs"] = Json::array();
    for (const auto& r : recipe.inputs) j["inputs"].push_back(to_json(r));
  }
  if (recipe.expected_f) j["expected_f"] = integer_json(*recipe.expected_f);
  return j;
}

generators::Recipe recipe_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
    throw Error(ErrorCode::ParseError, "recipe needs a \"family\"");
  }
  generators::Recipe r;
  r.family = j["family"].get<std::string>();
  if (j.contains("params")) {
    for (const auto& p : j["params"]) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string()) {
        throw Error(ErrorCode::ParseError, "recipe params are [key, value] string pairs");
      }
      r.params.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  }
  if (j.contains("inputs")) {
    for (const auto& x : j["inputs"]) r.inputs.push_back(recipe_from_json(x));
  }
  if (j.contains("expected_f")) r.expected_f = parse_integer(j["expected_f"]);
  return r;
}

Json to_json(const spectrum::SpectrumReport& report) {
  const auto& c = report.context;
  Json j;
  j["context"] = Json{{"n", c.n}, {"d", c.d}, {"space", spectrum::space_name(c.space)}};
  j["rule"] = report.rule;
  j["cap"] = integer_json(report.cap);
  j["found"] = Json::array();
  for (const auto& [f, recipe] : report.found) {
    j["found"].push_back(Json{{"f", integer_json(f)},
                              {"witness", recipe.str()},
                              {"predicted_member", spectrum::predicted_member(report.rule, c.n, c.d, f)},
                              {"recipe", to_json(recipe)}});
  }
  auto list = [](const std::vector<Integer>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(integer_json(x));
    return a;
  };
  j["predicted"] = list(report.predicted);
  j["missing_predicted"] = list(report.missing_predicted);
  j["unexpected"] = list(report.unexpected);
  j["partial"] = report.partial;
  j["candidates"] = report.candidates;
  j["counted"] = report.counted;
  return j;
}

ArrangementFile arrangement_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw Error(ErrorCode::ParseError, "arrangement needs a \"type\"");
  }
  const std::string type = j["type"].get<std::string>();
  const std::size_t d = parse_dim(j);
  ArrangementFile file;
  if (type == "projective") {
    if (!j.contains("covectors") || !j["covectors"].is_array()) throw Error(ErrorCode::ParseError, "missing \"covectors\"");
    std::vector<IntVector> cs;
    for (const auto& c : j["covectors"]) {
      IntVector v = parse_vector(c);
      if (v.dim() != d + 1) throw Error(ErrorCode::ParseError, "covector " + c.dump() + " needs d+1 entries");
      cs.push_back(std::move(v));
    }
    file.arrangement = projarr::ProjArrangement::make(d, std::move(cs));
  } else if (type == "toric") {
    if (!j.contains("subtori") || !j["subtori"].is_array()) throw Error(ErrorCode::ParseError, "missing \"subtori\"");
    std::vector<toric::Subtorus> subs;
    for (const auto& s : j["subtori"]) {
      if (!s.is_object() || !s.contains("a") || !s.contains("c")) throw Error(ErrorCode::ParseError, "subtorus needs a and c");
      IntVector a = parse_vector(s["a"]);
      if (a.dim() != d) throw Error(ErrorCode::ParseError, "normal " + s["a"].dump() + " needs d entries");
      subs.push_back(toric::Subtorus::make(a, parse_rational(s["c"])));
    }
    file.arrangement = toric::ToricArrangement::make(d, std::move(subs));
  } else {
    throw Error(ErrorCode::ParseError, "unknown arrangement type " + type);
  }
  if (j.contains("recipe")) file.recipe = recipe_from_json(j["recipe"]);
  return file;
}

Json arrangement_file_json(const ArrangementFile& file) {
  Json j = std::visit([](const auto& a) { return to_json(a); }, file.arrangement);
  if (file.recipe) j["recipe"] = to_json(*file.recipe);
  return j;
}

ArrangementFile read_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
  return arrangement_from_json(j);
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << j.dump(2) << '\n';
}

std::string report_csv(const spectrum::SpectrumReport& report) {
  std::ostringstream os;
  os << "f,witness,predicted_member\n";
  for (const auto& [f, recipe] : report.found) {
    std::string w = recipe.str();
    std::string quoted = "\"";
    for (char ch : w) {
      if (ch == '"') quoted += '"';
      quoted += ch;
    }
    quoted += '"';
    const bool member = spectrum::predicted_member(report.rule, report.context.n, report.context.d, f);
    os << f.get_str() << ',' << quoted << ',' << (member ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace arrcount::io
