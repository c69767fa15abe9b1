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

#ifndef MBQR_SCENARIO_H_
#define MBQR_SCENARIO_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mbqr {

// Errors in a scenario config; the message names the key and line.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Line-oriented "key = value" text with [section] headers. A header may carry
// a name ("[run row1]"); such sections may repeat. '#' and ';' start
// comments.
class Config {
 public:
  struct Entry {
    std::string value;
    int line = 0;  // 0 for values that came from the environment
  };
  struct Section {
    std::string kind;
    std::string name;
    int line = 0;
    std::map<std::string, Entry> entries;
  };

  static Config parse(const std::string& text, const std::string& source = "config");
  static Config load(const std::string& path);

  // Applies MBQR_<SECTION>_<KEY>=value overrides to unnamed sections, creating
  // them if needed. `get` maps a variable name to its value.
  void apply_overrides(const std::vector<std::string>& names,
                       const std::function<std::optional<std::string>(const std::string&)>& get);

  const std::string& source() const { return source_; }
  const std::vector<Section>& sections() const { return sections_; }
  // The unnamed section of this kind, or nullptr.
  const Section* find(const std::string& kind) const;
  std::vector<const Section*> all(const std::string& kind) const;
  Section& ensure(const std::string& kind);

 private:
  std::string source_;
  std::vector<Section> sections_;
};

struct RunOptions {
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed;
  std::ostream* log = nullptr;  // progress and summaries
};

inline constexpr const char* kCommands[] = {"compile", "purify", "threshold",
                                           "repeater", "sweep", "verify"};

// Validates the config against the command's schema and runs it. Output
// files are written atomically. Returns the process exit status: 0 on
// success, 1 when a verification or invariant fails. Throws ConfigError
// for invalid configs.
int run_scenario(const std::string& command, const Config& cfg, const RunOptions& opts);

// Writes to a temporary file next to `path` and renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace mbqr

#endif  // MBQR_SCENARIO_H_
