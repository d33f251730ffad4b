#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "arrcount/cli.hpp"
#include "arrcount/io.hpp"

using namespace arrcount;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return Run{code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("arrcount_cli_" + name)).string();
}

std::string write(const std::string& name, const std::string& text) {
  const std::string path = temp_path(name);
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("count on the coordinate triangle") {
  const auto tri = write("tri.json", R"({"type":"projective","d":2,"covectors":[[1,0,0],[0,1,0],[0,0,1]]})");
  for (const std::string engine : {"zaslavsky", "oracle", "exact"}) {
    const auto r = run({"count", "--engine", engine, tri});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"f\":4}\n");
  }
  CHECK(run({"count", "--engine", "grid", tri}).code == 2);
}

TEST_CASE("engines agree on generated files") {
  const auto np = temp_path("np.json");
  REQUIRE(run({"gen", "near_pencil", "n=7", "-o", np}).code == 0);
  const auto c = temp_path("cone.json");
  REQUIRE(run({"gen", "cone", "extras=1", "--base", np, "-o", c, "--expect"}).code == 0);
  CHECK(run({"count", c}).out == run({"count", "--engine", "oracle", c}).out);

  const auto t = temp_path("torus.json");
  REQUIRE(run({"gen", "toric_construction_b", "n=5", "d=2", "k=3", "-o", t, "--expect"}).code == 0);
  CHECK(run({"count", t}).out == "{\"f\":9}\n");
  CHECK(run({"count", "--engine", "grid", t}).out == "{\"f\":9}\n");
}

TEST_CASE("bounds table") {
  const auto r = run({"bounds", "-n", "11", "-d", "3", "-m", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lemma4 56 56\n") != std::string::npos);
  const auto j = io::Json::parse(run({"bounds", "-n", "11", "-d", "3", "-m", "5", "--format", "json"}).out);
  CHECK(j.size() == 5);
}

TEST_CASE("spectrum") {
  CHECK(run({"spectrum", "--theorem4", "-n", "11", "-d", "3"}).out == "[36,48,50,56]\n");
  CHECK(io::Json::parse(run({"spectrum", "--theorem5", "-n", "50"}).out).size() == 36);
  CHECK(run({"spectrum", "--martinov", "-n", "10"}).out == "[18,24,25,28]\n");
  CHECK(run({"spectrum", "--toric", "-n", "4", "-d", "2", "--cap", "6"}).out == "[3,4,5,6]\n");
  CHECK(run({"spectrum", "--theorem4", "-n", "10", "-d", "3"}).code == 2);
  CHECK(run({"spectrum", "-n", "10"}).code == 2);
}

TEST_CASE("gen with a mismatching expectation fails") {
  const auto bad = write("bad.json", R"({"type":"projective","d":2,"covectors":[[1,0,0],[0,1,0],[0,0,1]],
    "recipe":{"family":"near_pencil","params":[["n","3"]],"expected_f":5}})");
  // The stored expectation contradicts the family and is rejected on rebuild.
  CHECK(run({"gen", "cone", "extras=1", "--base", bad, "--expect"}).code == 2);
}

TEST_CASE("search reports") {
  const auto json = temp_path("report.json"), csv = temp_path("report.csv");
  const auto r = run({"search", "--space", "projective", "-n", "11", "-d", "3", "--cap", "auto", "--json", json, "--csv", csv});
  CHECK(r.code == 0);
  const auto j = io::Json::parse(r.out);
  CHECK(j["rule"] == "theorem4");
  CHECK(j["unexpected"].empty());
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header == "f,witness,predicted_member");
  CHECK(io::Json::parse(std::ifstream(json)) == j);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"count"}).code == 2);
  CHECK(run({"count", "--engine", "simplex", "x.json"}).code == 2);
  CHECK(run({"count", temp_path("missing.json")}).code == 2);
  const auto bad = write("zero.json", R"({"type":"projective","d":2,"covectors":[[0,0,0],[1,0,0]]})");
  CHECK(run({"count", bad}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
