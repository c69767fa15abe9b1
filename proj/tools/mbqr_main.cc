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

#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mbqr/scenario.h"

extern char** environ;

namespace {

std::vector<std::string> environment_names() {
  std::vector<std::string> names;
  for (char** e = environ; e && *e; ++e) {
    std::string kv(*e);
    names.push_back(kv.substr(0, kv.find('=')));
  }
  return names;
}

std::optional<std::string> getenv_opt(const std::string& name) {
  const char* v = std::getenv(name.c_str());
  if (!v) return std::nullopt;
  return std::string(v);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measurement-based quantum repeater toolkit"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  const char* about[] = {
      "Compile Clifford circuits into graph-state resources",
      "Tabulate purification maps over noise and input fidelity",
      "Find critical noise levels for purification",
      "Run repeater chains and report fidelity and overhead",
      "Sweep distance and nesting level",
      "Run the verification suites",
  };
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(mbqr::kCommands); ++i) {
    CLI::App* sub = app.add_subcommand(mbqr::kCommands[i], about[i]);
    sub->add_option("-c,--config", config_path, "Scenario config file")->check(CLI::ExistingFile);
    sub->add_option("-o,--out", out_dir, "Output directory (env MBQR_OUT)");
    sub->add_option("-s,--seed", seed, "Random seed (env MBQR_SEED)");
    subs.push_back(sub);
  }
  CLI11_PARSE(app, argc, argv);

  std::string command;
  for (auto* sub : subs) {
    if (sub->parsed()) command = sub->get_name();
  }

  try {
    mbqr::Config cfg = config_path.empty() ? mbqr::Config::parse("", "<no config>")
                                           : mbqr::Config::load(config_path);
    cfg.apply_overrides(environment_names(), getenv_opt);
    mbqr::RunOptions opts;
    opts.log = &std::cout;
    if (!out_dir.empty()) {
      opts.out_dir = out_dir;
    } else if (auto env = getenv_opt("MBQR_OUT")) {
      opts.out_dir = *env;
    }
    if (seed) {
      opts.seed = seed;
    } else if (auto env = getenv_opt("MBQR_SEED")) {
      try {
        opts.seed = std::stoull(*env);
      } catch (const std::exception&) {
        throw mbqr::ConfigError("environment MBQR_SEED: expected an integer, got '" + *env + "'");
      }
    }
    return mbqr::run_scenario(command, cfg, opts);
  } catch (const mbqr::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
}
