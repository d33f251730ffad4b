#pragma once

// JSON and CSV formats for arrangements, recipes and search reports.

#include "json.hpp"

#include <optional>
#include <string>
#include <variant>

#include "arrcount/generators.hpp"
#include "arrcount/projarr.hpp"
#include "arrcount/spectrum.hpp"
#include "arrcount/toric.hpp"

namespace arrcount::io {

using Json = nlohmann::ordered_json;

/// Small integers as JSON numbers, larger ones as decimal strings.
Json integer_json(const Integer& v);

Json to_json(const projarr::ProjArrangement& arr);
Json to_json(const toric::ToricArrangement& arr);
Json to_json(const generators::Recipe& recipe);
Json to_json(const spectrum::SpectrumReport& report);

generators::Recipe recipe_from_json(const Json& j);

struct ArrangementFile {
  std::variant<projarr::ProjArrangement, toric::ToricArrangement> arrangement;
  std::optional<generators::Recipe> recipe;

  bool is_toric() const { return arrangement.index() == 1; }
};

/// {"type":"projective","d":3,"covectors":[["1","0","0","0"],...]} or
/// {"type":"toric","d":2,"subtori":[{"a":["1","0"],"c":"1/2"},...]}, with an
/// optional "recipe". Projective input is validated.
ArrangementFile arrangement_from_json(const Json& j);
Json arrangement_file_json(const ArrangementFile& file);

ArrangementFile read_arrangement(const std::string& path);
void write_json(const std::string& path, const Json& j);

/// Columns f, witness, predicted_member.
std::string report_csv(const spectrum::SpectrumReport& report);

}  // namespace arrcount::io
