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

#include "mbqr/scenario.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "mbqr/checks.h"
#include "mbqr/protocols.h"
#include "mbqr/purification.h"
#include "mbqr/repeater.h"
#include "mbqr/resource.h"

namespace mbqr {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

std::string upper(std::string s) {
  for (char& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

}  // namespace

Config Config::parse(const std::string& text, const std::string& source) {
  Config cfg;
  cfg.source_ = source;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  Section* current = nullptr;
  auto fail = [&](const std::string& msg) {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + msg);
  };
  while (std::getline(in, raw)) {
    ++line;
    std::string s = raw;
    std::size_t cut = s.find_first_of("#;");
    if (cut != std::string::npos) s.resize(cut);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail("unterminated section header '" + s + "'");
      std::string inner = trim(std::string_view(s).substr(1, s.size() - 2));
      std::size_t sp = inner.find_first_of(" \t");
      Section sec;
      sec.kind = lower(inner.substr(0, sp));
      sec.name = sp == std::string::npos ? "" : trim(inner.substr(sp));
      sec.line = line;
      if (sec.kind.empty()) fail("empty section header");
      if (sec.name.empty() && cfg.find(sec.kind)) fail("duplicate section [" + sec.kind + "]");
      cfg.sections_.push_back(std::move(sec));
      current = &cfg.sections_.back();
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) fail("expected 'key = value', got '" + s + "'");
    std::string key = lower(trim(std::string_view(s).substr(0, eq)));
    std::string value = trim(std::string_view(s).substr(eq + 1));
    if (key.empty()) fail("missing key before '='");
    if (!current) fail("key '" + key + "' appears before any [section]");
    if (current->entries.count(key)) fail("duplicate key '" + key + "'");
    current->entries[key] = {value, line};
  }
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const Config::Section* Config::find(const std::string& kind) const {
  for (const auto& s : sections_) {
    if (s.kind == kind && s.name.empty()) return &s;
  }
  return nullptr;
}

std::vector<const Config::Section*> Config::all(const std::string& kind) const {
  std::vector<const Section*> out;
  for (const auto& s : sections_) {
    if (s.kind == kind) out.push_back(&s);
  }
  return out;
}

Config::Section& Config::ensure(const std::string& kind) {
  for (auto& s : sections_) {
    if (s.kind == kind && s.name.empty()) return s;
  }
  sections_.push_back({kind, "", 0, {}});
  return sections_.back();
}

void Config::apply_overrides(
    const std::vector<std::string>& names,
    const std::function<std::optional<std::string>(const std::string&)>& get) {
  static const std::vector<std::string> kinds = {"scenario", "compile", "purify", "threshold",
                                                 "repeater", "sweep",   "verify", "channel"};
  for (const auto& var : names) {
    if (var.rfind("MBQR_", 0) != 0) continue;
    if (var == "MBQR_OUT" || var == "MBQR_SEED") continue;
    std::string rest = var.substr(5);
    bool matched = false;
    for (const auto& kind : kinds) {
      std::string prefix = upper(kind) + "_";
      if (rest.rfind(prefix, 0) == 0 && rest.size() > prefix.size()) {
        auto value = get(var);
        if (!value) continue;
        ensure(kind).entries[lower(rest.substr(prefix.size()))] = {trim(*value), 0};
        matched = true;
        break;
      }
    }
    if (!matched) {
      throw ConfigError("environment variable " + var + " does not name a config section");
    }
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  fs::rename(tmp, target);
}

namespace {

// Typed access to one section, with fallbacks to more general sections.
// Records which keys were read so leftovers can be rejected.
class Reader {
 public:
  Reader(const Config& cfg, std::string kind, std::vector<const Config::Section*> chain)
      : cfg_(cfg), kind_(std::move(kind)), chain_(std::move(chain)) {}

  bool has(const std::string& key) const { return lookup(key) != nullptr; }

  std::string text(const std::string& key, const std::string& fallback) const {
    const auto* e = lookup(key);
    return e ? e->entry.value : fallback;
  }

  std::string choice(const std::string& key, const std::string& fallback,
                     const std::vector<std::string>& allowed) const {
    std::string v = text(key, fallback);
    if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
      std::string list;
      for (const auto& a : allowed) list += (list.empty() ? "" : ", ") + a;
      fail(key, "must be one of " + list + ", got '" + v + "'");
    }
    return v;
  }

  double real(const std::string& key, std::optional<double> fallback, double lo, double hi,
              bool lo_open = false) const {
    const auto* e = lookup(key);
    if (!e) {
      if (!fallback) missing(key);
      return *fallback;
    }
    double x = parse_real(key, e->entry.value);
    check_range(key, x, lo, hi, lo_open);
    return x;
  }

  std::vector<double> reals(const std::string& key, const std::vector<double>& fallback, double lo,
                            double hi) const {
    const auto* e = lookup(key);
    if (!e) return fallback;
    std::vector<double> out;
    for (const auto& item : split_list(e->entry.value)) {
      double x = parse_real(key, item);
      check_range(key, x, lo, hi, false);
      out.push_back(x);
    }
    if (out.empty()) fail(key, "needs at least one value");
    return out;
  }

  long long integer(const std::string& key, std::optional<long long> fallback, long long lo,
                    long long hi) const {
    const auto* e = lookup(key);
    if (!e) {
      if (!fallback) missing(key);
      return *fallback;
    }
    return parse_int(key, e->entry.value, lo, hi);
  }

  std::vector<long long> integers(const std::string& key, const std::vector<long long>& fallback,
                                  long long lo, long long hi) const {
    const auto* e = lookup(key);
    if (!e) return fallback;
    std::vector<long long> out;
    for (const auto& item : split_list(e->entry.value)) out.push_back(parse_int(key, item, lo, hi));
    if (out.empty()) fail(key, "needs at least one value");
    return out;
  }

  std::vector<std::string> list(const std::string& key,
                                const std::vector<std::string>& fallback) const {
    const auto* e = lookup(key);
    if (!e) return fallback;
    auto out = split_list(e->entry.value);
    if (out.empty()) fail(key, "needs at least one value");
    return out;
  }

  bool boolean(const std::string& key, bool fallback) const {
    const auto* e = lookup(key);
    if (!e) return fallback;
    std::string v = lower(e->entry.value);
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    fail(key, "expected true or false, got '" + e->entry.value + "'");
    return false;
  }

  [[noreturn]] void fail(const std::string& key, const std::string& msg) const {
    const auto* e = lookup(key);
    std::string where = cfg_.source();
    if (e && e->entry.line > 0) {
      where += ":" + std::to_string(e->entry.line);
    } else if (e) {
      where = "environment MBQR_" + upper(e->section->kind) + "_" + upper(key);
    }
    std::string sec = e ? label(*e->section) : "[" + kind_ + "]";
    throw ConfigError(where + ": " + sec + " key '" + key + "' " + msg);
  }

 private:
  struct Found {
    const Config::Section* section;
    const Config::Entry& entry;
  };

  std::optional<Found> find(const std::string& key) const {
    for (const auto* s : chain_) {
      if (!s) continue;
      auto it = s->entries.find(key);
      if (it != s->entries.end()) return Found{s, it->second};
    }
    return std::nullopt;
  }

  // Keeps the optional alive for callers that only want a pointer.
  const Found* lookup(const std::string& key) const {
    cache_.reset();
    if (auto f = find(key)) cache_.emplace(*f);
    return cache_ ? &*cache_ : nullptr;
  }

  static std::string label(const Config::Section& s) {
    return "[" + s.kind + (s.name.empty() ? "" : " " + s.name) + "]";
  }

  [[noreturn]] void missing(const std::string& key) const {
    std::string sec = "[" + kind_ + "]";
    for (const auto* s : chain_) {
      if (s) {
        sec = label(*s);
        break;
      }
    }
    throw ConfigError(cfg_.source() + ": missing required key '" + key + "' in " + sec);
  }

  double parse_real(const std::string& key, const std::string& v) const {
    double x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(x)) {
      fail(key, "expected a number, got '" + v + "'");
    }
    return x;
  }

  long long parse_int(const std::string& key, const std::string& v, long long lo,
                      long long hi) const {
    long long x = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || ptr != v.data() + v.size()) {
      fail(key, "expected an integer, got '" + v + "'");
    }
    if (x < lo || x > hi) {
      fail(key, "= " + v + " is out of range [" + std::to_string(lo) + ", " + std::to_string(hi) +
                    "]");
    }
    return x;
  }

  void check_range(const std::string& key, double x, double lo, double hi, bool lo_open) const {
    bool ok = (lo_open ? x > lo : x >= lo) && x <= hi;
    if (!ok) {
      fail(key, "= " + fmt(x) + " is out of range " + (lo_open ? "(" : "[") + fmt(lo) + ", " +
                    (std::isinf(hi) ? "inf" : fmt(hi)) + "]");
    }
  }

  const Config& cfg_;
  std::string kind_;
  std::vector<const Config::Section*> chain_;
  mutable std::optional<Found> cache_;
};

constexpr double kInf = std::numeric_limits<double>::infinity();

using Schema = std::map<std::string, std::set<std::string>>;

const std::set<std::string> kRepeaterKeys = {
    "distance",   "levels",          "steps",          "noise",          "p_bell",
    "variant",    "integrated",      "final_purification", "target_fidelity", "target_overhead"};

Schema schema_for(const std::string& command) {
  Schema s;
  s["scenario"] = {"command", "output", "seed"};
  if (command == "compile") {
    s["compile"] = {"resources", "variant", "circuit", "name"};
  } else if (command == "purify") {
    s["purify"] = {"network", "steps", "variant", "family", "p", "fidelity", "mode"};
  } else if (command == "threshold") {
    s["threshold"] = {"steps", "family", "criterion", "variant", "p_low", "tolerance"};
  } else if (command == "repeater") {
    s["repeater"] = kRepeaterKeys;
    s["run"] = kRepeaterKeys;
    s["channel"] = {"v_opt", "eta", "dark", "alpha"};
  } else if (command == "sweep") {
    s["sweep"] = {"d_min", "d_max", "points", "levels_min", "levels_max", "log_spacing",
                  "steps", "noise", "p_bell", "variant", "integrated", "final_purification"};
    s["channel"] = {"v_opt", "eta", "dark", "alpha"};
  } else if (command == "verify") {
    s["verify"] = {"measurement_cases", "max_vertices", "lc_max_vertices", "random_circuits",
                   "mc_trials", "resource_files", "variant"};
  }
  return s;
}

void check_schema(const std::string& command, const Config& cfg) {
  Schema schema = schema_for(command);
  for (const auto& sec : cfg.sections()) {
    auto it = schema.find(sec.kind);
    std::string where = cfg.source() + ":" + std::to_string(sec.line);
    if (it == schema.end()) {
      throw ConfigError(where + ": unknown section [" + sec.kind + "] for command " + command);
    }
    if (!sec.name.empty() && sec.kind != "run") {
      throw ConfigError(where + ": section [" + sec.kind + "] cannot be named");
    }
    for (const auto& [key, entry] : sec.entries) {
      if (!it->second.count(key)) {
        std::string at = entry.line > 0 ? cfg.source() + ":" + std::to_string(entry.line)
                                        : "environment MBQR_" + upper(sec.kind) + "_" + upper(key);
        throw ConfigError(at + ": unknown key '" + key + "' in [" + sec.kind + "]");
      }
    }
  }
  if (const auto* sc = cfg.find("scenario")) {
    auto it = sc->entries.find("command");
    if (it != sc->entries.end() && it->second.value != command) {
      throw ConfigError(cfg.source() + ":" + std::to_string(it->second.line) +
                        ": [scenario] key 'command' is '" + it->second.value +
                        "' but the command line asks for " + command);
    }
  }
}

struct Context {
  const Config& cfg;
  const RunOptions& opts;
  std::uint64_t seed = 1;
  std::string stem;

  std::ostream& log() const { return opts.log ? *opts.log : std::cout; }
  std::string path(const std::string& ext) const {
    return (fs::path(opts.out_dir) / (stem + ext)).string();
  }
  void emit(const std::string& ext, const std::string& content) const {
    std::string p = path(ext);
    write_file_atomic(p, content);
    log() << "wrote " << p << "\n";
  }
};

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

OxfordVariant read_variant(const Reader& r) {
  return parse_variant(r.choice("variant", "xrot", {"xrot", "zz"}));
}

// ---- compile ----

int run_compile(const Context& ctx) {
  Reader r(ctx.cfg, "compile", {ctx.cfg.find("compile")});
  OxfordVariant v = read_variant(r);
  std::vector<std::pair<ResourceState, CliffordCircuit>> items;
  if (r.has("circuit")) {
    std::string file = r.text("circuit", "");
    std::ifstream in(file, std::ios::binary);
    if (!in) r.fail("circuit", "names a file that cannot be read: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    CliffordCircuit c = CliffordCircuit::from_text(ss.str());
    std::string name = r.text("name", fs::path(file).stem().string());
    items.emplace_back(compile_resource(c, name), c);
  } else {
    const auto& known = resource_names();
    for (const auto& name : r.list("resources", known)) {
      if (std::find(known.begin(), known.end(), name) == known.end()) {
        r.fail("resources", "contains unknown resource '" + name + "'");
      }
      CliffordCircuit c = named_circuit(name, v);
      items.emplace_back(compile_resource(c, name), c);
    }
  }
  Json out = {{"command", "compile"}, {"variant", std::string(variant_name(v))}};
  Json list = Json::array();
  bool ok = true;
  for (const auto& [res, circ] : items) {
    VerifyReport rep = verify_resource(res, circ, 2, ctx.seed);
    ok = ok && rep.ok;
    std::string base = (fs::path(ctx.opts.out_dir) / res.name).string();
    write_file_atomic(base + ".resource", res.to_text());
    write_file_atomic(base + ".circuit", circ.to_text());
    ctx.log() << res.name << ": " << res.graph_state.size() << " vertices, "
              << res.graph_state.graph.edge_count() << " edges, verify "
              << (rep.ok ? "ok" : "FAILED " + rep.detail) << "\n";
    list.push_back({{"name", res.name},
                    {"vertices", res.graph_state.size()},
                    {"edges", res.graph_state.graph.edge_count()},
                    {"inputs", res.input_count()},
                    {"outputs", res.output_count()},
                    {"verified", rep.ok},
                    {"max_deviation", rep.max_deviation}});
  }
  out["resources"] = list;
  ctx.emit(".json", dump(out));
  return ok ? 0 : 1;
}

// ---- purify ----

int run_purify(const Context& ctx) {
  Reader r(ctx.cfg, "purify", {ctx.cfg.find("purify")});
  std::string network = r.choice("network", "purification", {"purification", "integrated"});
  int steps = static_cast<int>(r.integer("steps", 1, 0, 2));
  OxfordVariant v = read_variant(r);
  InputFamily fam = parse_family(r.choice("family", "binary", {"binary", "werner"}));
  auto ps = r.reals("p", {1.0, 0.99, 0.98, 0.97}, 0, 1);
  auto fs_ = r.reals("fidelity", {0.6, 0.7, 0.8, 0.9, 0.95}, 0.25, 1);
  std::string mode = r.choice("mode", "fast", {"fast", "exact"});
  Network net = network == "integrated" ? integrated_network(steps, v) : purification_network(steps, v);
  PurificationMap map;
  if (mode == "fast") {
    map = network_map(build_error_effects(net));
  } else {
    if (net.vertex_count() > kDenseQubitLimit) {
      r.fail("mode", "exact needs at most " + std::to_string(kDenseQubitLimit) +
                         " resource qubits, network " + net.name + " has " +
                         std::to_string(net.vertex_count()));
    }
    map = [net](const BellDiagonalState& s, double p) {
      return mb_purify_exact(net, p, std::vector<BellDiagonalState>(net.links.size(), s));
    };
  }
  auto rows = purification_scan(map, net.name, fam, ps, fs_);
  ctx.emit(".csv", scan_csv(rows));
  return 0;
}

// ---- threshold ----

int run_threshold(const Context& ctx) {
  Reader r(ctx.cfg, "threshold", {ctx.cfg.find("threshold")});
  auto steps = r.integers("steps", {1, 2}, 1, 2);
  auto families = r.list("family", {"binary", "werner"});
  auto criteria = r.list("criterion", {"iterated", "single-step"});
  OxfordVariant v = read_variant(r);
  double p_low = r.real("p_low", 0.85, 0, 1, true);
  double tol = r.real("tolerance", 1e-6, 0, 1e-2, true);
  std::string csv =
      "protocol,family,criterion,critical_noise,critical_p,resource_fidelity,bracket_ok\n";
  Json out = {{"command", "threshold"}, {"variant", std::string(variant_name(v))}};
  Json list = Json::array();
  for (long long s : steps) {
    Network net = purification_network(static_cast<int>(s), v);
    PurificationMap map = network_map(build_error_effects(net));
    for (const auto& fname : families) {
      InputFamily fam;
      try {
        fam = parse_family(fname);
      } catch (const std::invalid_argument& e) {
        r.fail("family", e.what());
      }
      for (const auto& cname : criteria) {
        ThresholdCriterion crit;
        try {
          crit = parse_criterion(cname);
        } catch (const std::invalid_argument& e) {
          r.fail("criterion", e.what());
        }
        ThresholdReport rep = threshold_find(map, crit, fam, p_low, tol);
        double rf = resource_fidelity(net.parties[0], rep.critical_p);
        char buf[256];
        std::snprintf(buf, sizeof(buf), "%s,%s,%s,%.6f,%.6f,%.6f,%s\n", net.name.c_str(),
                      fname.c_str(), cname.c_str(), rep.critical_noise, rep.critical_p, rf,
                      rep.bracket_ok ? "true" : "false");
        csv += buf;
        ctx.log() << net.name << " " << fname << " " << cname << ": critical noise "
                  << fmt(rep.critical_noise) << (rep.bracket_ok ? "" : " (" + rep.diagnostic + ")")
                  << "\n";
        list.push_back({{"protocol", net.name},
                        {"family", fname},
                        {"criterion", cname},
                        {"critical_noise", rep.critical_noise},
                        {"critical_p", rep.critical_p},
                        {"resource_fidelity", rf},
                        {"bracket_ok", rep.bracket_ok},
                        {"diagnostic", rep.diagnostic}});
      }
    }
  }
  out["thresholds"] = list;
  ctx.emit(".csv", csv);
  ctx.emit(".json", dump(out));
  return 0;
}

// ---- repeater and sweep ----

ChannelModel read_channel(const Config& cfg) {
  Reader r(cfg, "channel", {cfg.find("channel")});
  ChannelModel cm;
  if (!cfg.find("channel")) return cm;
  cm.v_opt = r.real("v_opt", cm.v_opt, 0, 1);
  cm.eta = r.real("eta", cm.eta, 0, 1, true);
  cm.dark = r.real("dark", cm.dark, 0, 1);
  cm.alpha = r.real("alpha", cm.alpha, 0, kInf);
  return cm;
}

void read_chain_settings(const Reader& r, RepeaterConfig* c) {
  c->steps = static_cast<int>(r.integer("steps", 1, 0, 2));
  c->noise_p = 1.0 - r.real("noise", 0.01, 0, 1);
  c->p_bell = r.real("p_bell", 1.0, 0, 1, true);
  c->variant = parse_repeater_variant(r.choice("variant", "V2", {"V1", "V2", "V3"}));
  c->integrated_swapping = r.boolean("integrated", true);
  c->final_purification = r.boolean("final_purification", true);
}

Json cost_json(const CostAccount& c) {
  return {{"attempts_per_pair", c.attempts_per_pair},
          {"level_success", c.level_success},
          {"level_m", c.level_m},
          {"overhead", c.overhead},
          {"elementary_pairs_consumed", c.elementary_pairs_consumed},
          {"final_success", c.final_success},
          {"final_m", c.final_m}};
}

int run_repeater_cmd(const Context& ctx) {
  const Config& cfg = ctx.cfg;
  ChannelModel cm = read_channel(cfg);
  std::vector<std::pair<std::string, Reader>> runs;
  auto named = cfg.all("run");
  if (named.empty()) {
    runs.emplace_back("default", Reader(cfg, "repeater", {cfg.find("repeater")}));
  } else {
    for (const auto* s : named) {
      if (s->name.empty()) {
        throw ConfigError(cfg.source() + ":" + std::to_string(s->line) +
                          ": [run] sections need a name, e.g. [run row1]");
      }
      runs.emplace_back(s->name, Reader(cfg, "run", {s, cfg.find("repeater")}));
    }
  }
  std::string csv = "name,distance_km,levels,steps_per_level,noise,fidelity,overhead\n";
  Json out = {{"command", "repeater"}};
  Json list = Json::array();
  bool ok = true;
  for (const auto& [name, r] : runs) {
    RepeaterConfig c;
    c.channel = cm;
    c.levels = static_cast<int>(r.integer("levels", std::nullopt, 1, 30));
    c.total_distance = r.real("distance", std::nullopt, 0, kInf, true);
    read_chain_settings(r, &c);
    Json j = {{"name", name},
              {"distance_km", c.total_distance},
              {"levels", c.levels},
              {"steps_per_level", c.steps},
              {"noise", r.real("noise", 0.01, 0, 1)},
              {"p_bell", c.p_bell},
              {"variant", std::string(variant_name(c.variant))},
              {"integrated", c.integrated_swapping}};
    try {
      RepeaterResult res = run_repeater(c);
      char buf[256];
      std::snprintf(buf, sizeof(buf), "%s,%.6g,%d,%d,%.6g,%.10f,%.6e\n", name.c_str(),
                    c.total_distance, c.levels, c.steps, 1 - c.noise_p, res.fidelity,
                    res.cost.overhead);
      csv += buf;
      j["fidelity"] = res.fidelity;
      j["weights"] = res.state.w;
      j["level_fidelity"] = res.level_fidelity;
      j["cost"] = cost_json(res.cost);
      if (r.has("target_fidelity")) {
        double t = r.real("target_fidelity", 0, 0, 1);
        j["target_fidelity"] = t;
        j["fidelity_deviation_pp"] = 100 * (res.fidelity - t);
      }
      if (r.has("target_overhead")) {
        double t = r.real("target_overhead", 1, 0, kInf, true);
        j["target_overhead"] = t;
        j["overhead_ratio"] = res.cost.overhead / t;
      }
      ctx.log() << name << ": F = " << fmt(res.fidelity) << ", overhead = " << fmt(res.cost.overhead)
                << "\n";
    } catch (const ChainBrokenError& e) {
      ok = false;
      j["broken_level"] = e.level();
      j["error"] = e.what();
      ctx.log() << name << ": " << e.what() << "\n";
    }
    list.push_back(j);
  }
  out["runs"] = list;
  ctx.emit(".csv", csv);
  ctx.emit(".json", dump(out));
  return ok ? 0 : 1;
}

int run_sweep_cmd(const Context& ctx) {
  const Config& cfg = ctx.cfg;
  Reader r(cfg, "sweep", {cfg.find("sweep")});
  RepeaterConfig base;
  base.channel = read_channel(cfg);
  read_chain_settings(r, &base);
  SweepSpec spec;
  spec.d_min = r.real("d_min", spec.d_min, 0, kInf, true);
  spec.d_max = r.real("d_max", spec.d_max, spec.d_min, kInf);
  spec.points = static_cast<int>(r.integer("points", spec.points, 1, 100000));
  spec.levels_min = static_cast<int>(r.integer("levels_min", spec.levels_min, 1, 30));
  spec.levels_max = static_cast<int>(r.integer("levels_max", spec.levels_max, spec.levels_min, 30));
  spec.log_spacing = r.boolean("log_spacing", spec.log_spacing);
  auto rows = sweep(base, spec);
  ctx.emit(".csv", sweep_csv(rows));
  Json levels = Json::object();
  for (int n = spec.levels_min; n <= spec.levels_max; ++n) {
    Json entry = {{"points", 0}};
    for (const auto& row : rows) {
      if (row.levels != n) continue;
      entry["points"] = entry["points"].get<int>() + 1;
      entry["max_distance_km"] = row.distance_km;
      entry["fidelity_at_max_distance"] = row.fidelity;
      entry["overhead_at_max_distance"] = row.overhead;
    }
    levels[std::to_string(n)] = entry;
  }
  Json out = {{"command", "sweep"},
              {"steps_per_level", base.steps},
              {"noise", r.real("noise", 0.01, 0, 1)},
              {"rows", rows.size()},
              {"levels", levels}};
  ctx.emit(".json", dump(out));
  return 0;
}

// ---- verify ----

int run_verify(const Context& ctx) {
  Reader r(ctx.cfg, "verify", {ctx.cfg.find("verify")});
  auto cases = static_cast<std::size_t>(r.integer("measurement_cases", 200, 1, 1000000));
  auto max_v = static_cast<std::size_t>(r.integer("max_vertices", 8, 2, 12));
  auto lc_max = static_cast<std::size_t>(r.integer("lc_max_vertices", 6, 1, 7));
  auto circuits = static_cast<std::size_t>(r.integer("random_circuits", 50, 0, 100000));
  auto trials = static_cast<std::uint64_t>(r.integer("mc_trials", 100000, 100, 100000000));
  OxfordVariant v = read_variant(r);

  std::vector<ResourceState> resources;
  for (const auto& name : resource_names()) resources.push_back(named_resource(name, v));
  for (const auto& file : r.list("resource_files", {})) {
    std::ifstream in(file, std::ios::binary);
    if (!in) r.fail("resource_files", "names a file that cannot be read: " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    std::istringstream head(text);
    std::string line, word, name;
    while (std::getline(head, line)) {
      std::istringstream ls(line);
      if (ls >> word && word == "RESOURCE") {
        ls >> name;
        break;
      }
    }
    const auto& known = resource_names();
    if (std::find(known.begin(), known.end(), name) == known.end()) {
      r.fail("resource_files", "file " + file + " does not hold a named resource");
    }
    ResourceState res = ResourceState::from_text(text, named_circuit(name, v));
    res.name = name + " (" + fs::path(file).filename().string() + ")";
    resources.push_back(res);
  }

  std::vector<SuiteResult> suites;
  auto run = [&](SuiteResult s) {
    ctx.log() << (s.ok() ? "PASS " : "FAIL ") << s.name << ": " << s.cases << " cases, "
              << s.failures << " failures, max deviation " << fmt(s.max_deviation) << "\n";
    for (const auto& f : s.failed) ctx.log() << "  " << f << "\n";
    suites.push_back(std::move(s));
  };
  run(check_measurement_rules(cases, max_v, ctx.seed));
  run(check_lc_identity(lc_max));
  run(check_ghz_equivalence(v));
  run(check_resources(resources));
  if (circuits > 0) run(check_random_circuits(circuits, ctx.seed));
  run(check_readin_table());
  run(check_oracle_equivalence());
  run(check_noiseless_reduction());
  run(check_variant_accounting(trials, ctx.seed));

  bool ok = true;
  Json list = Json::array();
  for (const auto& s : suites) {
    ok = ok && s.ok();
    list.push_back({{"name", s.name},
                    {"ok", s.ok()},
                    {"cases", s.cases},
                    {"failures", s.failures},
                    {"max_deviation", s.max_deviation},
                    {"failed", s.failed}});
  }
  Json out = {{"command", "verify"}, {"ok", ok}, {"suites", list}};
  ctx.emit(".json", dump(out));
  ctx.log() << (ok ? "all suites passed" : "verification FAILED") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int run_scenario(const std::string& command, const Config& cfg, const RunOptions& opts) {
  if (std::find(std::begin(kCommands), std::end(kCommands), command) == std::end(kCommands)) {
    throw ConfigError("unknown command '" + command + "'");
  }
  check_schema(command, cfg);
  Context ctx{cfg, opts, 1, ""};
  Reader sc(cfg, "scenario", {cfg.find("scenario")});
  ctx.seed = opts.seed ? *opts.seed
                       : static_cast<std::uint64_t>(sc.integer("seed", 1, 0, 9223372036854775807LL));
  ctx.stem = sc.text("output", command);
  if (ctx.stem.empty() || ctx.stem.find('/') != std::string::npos) {
    sc.fail("output", "must be a plain file stem");
  }
  fs::create_directories(opts.out_dir);
  if (command == "compile") return run_compile(ctx);
  if (command == "purify") return run_purify(ctx);
  if (command == "threshold") return run_threshold(ctx);
  if (command == "repeater") return run_repeater_cmd(ctx);
  if (command == "sweep") return run_sweep_cmd(ctx);
  return run_verify(ctx);
}

}  // namespace mbqr
