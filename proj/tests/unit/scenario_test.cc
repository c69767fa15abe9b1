// Copyright 2026 The mbqr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "mbqr/scenario.h"

using namespace mbqr;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("mbqr_scenario_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& command, const std::string& text, const fs::path& out,
        std::ostream* log) {
  RunOptions opts;
  opts.out_dir = out.string();
  opts.log = log;
  return run_scenario(command, Config::parse(text, "test.ini"), opts);
}

}  // namespace

TEST_CASE("config parsing") {
  Config cfg = Config::parse(
      "# comment\n"
      "[scenario]\n"
      "command = repeater  ; trailing comment\n"
      "\n"
      "[run first]\n"
      "levels = 3\n"
      "[run second]\n"
      "LEVELS = 4\n",
      "x.ini");
  REQUIRE(cfg.find("scenario") != nullptr);
  CHECK(cfg.find("scenario")->entries.at("command").value == "repeater");
  CHECK(cfg.find("scenario")->entries.at("command").line == 3);
  auto runs = cfg.all("run");
  REQUIRE(runs.size() == 2);
  CHECK(runs[0]->name == "first");
  CHECK(runs[1]->entries.at("levels").value == "4");
  CHECK(cfg.find("run") == nullptr);
}

TEST_CASE("config syntax errors name the line") {
  CHECK_THROWS_WITH_AS(Config::parse("[a]\nb\n", "x.ini"), doctest::Contains("x.ini:2"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(Config::parse("k = 1\n", "x.ini"), doctest::Contains("before any"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(Config::parse("[a]\nk = 1\nk = 2\n", "x.ini"),
                       doctest::Contains("duplicate key 'k'"), ConfigError);
  CHECK_THROWS_WITH_AS(Config::parse("[a]\n[a]\n", "x.ini"), doctest::Contains("duplicate section"),
                       ConfigError);
  CHECK_THROWS_AS(Config::parse("[a\n", "x.ini"), ConfigError);
}

TEST_CASE("environment overrides") {
  Config cfg = Config::parse("[repeater]\nlevels = 3\n", "x.ini");
  std::map<std::string, std::string> env = {{"MBQR_REPEATER_LEVELS", "5"},
                                            {"MBQR_CHANNEL_ETA", "0.5"},
                                            {"MBQR_OUT", "ignored"},
                                            {"PATH", "/bin"}};
  std::vector<std::string> names;
  for (const auto& [k, v] : env) names.push_back(k);
  auto get = [&](const std::string& k) -> std::optional<std::string> { return env.at(k); };
  cfg.apply_overrides(names, get);
  CHECK(cfg.find("repeater")->entries.at("levels").value == "5");
  CHECK(cfg.find("repeater")->entries.at("levels").line == 0);
  CHECK(cfg.find("channel")->entries.at("eta").value == "0.5");

  CHECK_THROWS_WITH_AS(cfg.apply_overrides({"MBQR_BOGUS_X"}, get),
                       doctest::Contains("MBQR_BOGUS_X"), ConfigError);
}

TEST_CASE("schema and range errors name the key") {
  fs::path out = scratch_dir("errors");
  std::ostringstream log;
  CHECK_THROWS_WITH_AS(run("repeater", "[repeater]\ndistance = 1000\n", out, &log),
                       doctest::Contains("missing required key 'levels'"), ConfigError);
  CHECK_THROWS_WITH_AS(run("repeater", "[repeater]\nlevels = 3\ndistance = 1000\nlevel = 2\n", out,
                           &log),
                       doctest::Contains("test.ini:4: unknown key 'level'"), ConfigError);
  CHECK_THROWS_WITH_AS(run("repeater", "[repeater]\nlevels = 0\ndistance = 1000\n", out, &log),
                       doctest::Contains("'levels' = 0 is out of range [1, 30]"), ConfigError);
  CHECK_THROWS_WITH_AS(
      run("repeater", "[repeater]\nlevels = 3\ndistance = 1000\nnoise = lots\n", out, &log),
      doctest::Contains("test.ini:4: [repeater] key 'noise' expected a number"), ConfigError);
  CHECK_THROWS_WITH_AS(run("purify", "[sweep]\n", out, &log),
                       doctest::Contains("unknown section [sweep]"), ConfigError);
  CHECK_THROWS_WITH_AS(run("purify", "[scenario]\ncommand = sweep\n", out, &log),
                       doctest::Contains("'command'"), ConfigError);
  CHECK_THROWS_WITH_AS(run("purify", "[purify]\nmode = slow\n", out, &log),
                       doctest::Contains("must be one of fast, exact"), ConfigError);
  CHECK_THROWS_WITH_AS(
      run("purify", "[purify]\nnetwork = integrated\nsteps = 2\nmode = exact\n", out, &log),
      doctest::Contains("at most 12"), ConfigError);
  CHECK_THROWS_AS(run("launch", "", out, &log), ConfigError);
  // Nothing half-written is left behind.
  for (const auto& e : fs::directory_iterator(out)) {
    CHECK(e.path().extension() != ".tmp");
  }
}

TEST_CASE("repeater scenario writes deterministic outputs") {
  fs::path out = scratch_dir("repeater");
  std::string text =
      "[scenario]\noutput = chain\n"
      "[repeater]\nsteps = 1\nnoise = 0.01\n"
      "[run short]\nlevels = 3\ndistance = 1000\ntarget_fidelity = 0.95\n"
      "[run long]\nlevels = 6\ndistance = 10000\n";
  std::ostringstream log;
  CHECK(run("repeater", text, out, &log) == 0);
  std::string csv = slurp(out / "chain.csv");
  std::string js = slurp(out / "chain.json");
  CHECK(csv.rfind("name,distance_km,levels,steps_per_level,noise,fidelity,overhead\n", 0) == 0);
  CHECK(csv.find("\nshort,1000,3,1,0.01,") != std::string::npos);
  auto j = nlohmann::json::parse(js);
  REQUIRE(j["runs"].size() == 2);
  CHECK(j["runs"][0]["noise"].get<double>() == 0.01);
  CHECK(j["runs"][0].contains("fidelity_deviation_pp"));
  CHECK(j["runs"][1]["fidelity"].get<double>() > 0.9);

  CHECK(run("repeater", text, out, &log) == 0);
  CHECK(slurp(out / "chain.csv") == csv);
  CHECK(slurp(out / "chain.json") == js);
}

TEST_CASE("broken chain gives a nonzero status") {
  fs::path out = scratch_dir("broken");
  std::ostringstream log;
  CHECK(run("repeater", "[repeater]\nlevels = 1\ndistance = 20000\nnoise = 0.05\n", out, &log) == 1);
  auto j = nlohmann::json::parse(slurp(out / "repeater.json"));
  CHECK(j["runs"][0].contains("broken_level"));
}

TEST_CASE("threshold and purify scenarios") {
  fs::path out = scratch_dir("threshold");
  std::ostringstream log;
  CHECK(run("threshold", "[threshold]\nsteps = 1\nfamily = binary\ncriterion = iterated\n", out,
            &log) == 0);
  std::string csv = slurp(out / "threshold.csv");
  CHECK(csv.find("G3+/G3-,binary,iterated,0.0357") != std::string::npos);

  CHECK(run("purify", "[purify]\np = 1\nfidelity = 0.8\nmode = exact\n", out, &log) == 0);
  CHECK(slurp(out / "purify.csv") ==
        "protocol,family,p,F_in,F_out,p_success\nG3+/G3-,binary,1,0.8,0.941176470588,0.68\n");
}

TEST_CASE("compile scenario writes resource files") {
  fs::path out = scratch_dir("compile");
  std::ostringstream log;
  CHECK(run("compile", "[compile]\nresources = G3+, G4\n", out, &log) == 0);
  CHECK(fs::exists(out / "G3+.resource"));
  CHECK(fs::exists(out / "G4.circuit"));
  auto j = nlohmann::json::parse(slurp(out / "compile.json"));
  CHECK(j["resources"][1]["name"] == "G4");
  CHECK(j["resources"][1]["verified"] == true);
  CHECK_THROWS_WITH_AS(run("compile", "[compile]\nresources = G9\n", out, &log),
                       doctest::Contains("unknown resource 'G9'"), ConfigError);
}
