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

// Acceptance run: prints one PASS/FAIL line per criterion and details
// underneath. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <string>
#include <vector>

#include "mbqr/checks.h"
#include "mbqr/protocols.h"
#include "mbqr/purification.h"
#include "mbqr/repeater.h"

using namespace mbqr;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Criterion {
  std::string name;
  bool ok = true;
  std::vector<std::string> details;

  void note(bool pass, const char* format, ...) __attribute__((format(printf, 3, 4)));
  void add_suite(const SuiteResult& s) {
    note(s.ok(), "%s: %zu cases, %zu failures, max deviation %.3g", s.name.c_str(), s.cases,
         s.failures, s.max_deviation);
    for (const auto& f : s.failed) details.push_back("      " + f);
  }
  void report() const {
    std::printf("%s  %s\n", ok ? "PASS" : "FAIL", name.c_str());
    for (const auto& d : details) std::printf("%s\n", d.c_str());
    std::fflush(stdout);
  }
};

void Criterion::note(bool pass, const char* format, ...) {
  char buf[512];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  ok = ok && pass;
  details.push_back(std::string("    ") + (pass ? "ok   " : "MISS ") + buf);
}

Criterion thresholds() {
  Criterion c{"purification thresholds (one step 3.5%, two steps 7.1%, +-0.5 pp)"};
  const double target[] = {0.035, 0.071};
  for (int steps = 1; steps <= 2; ++steps) {
    PurificationMap map = network_map(build_error_effects(purification_network(steps)));
    bool any = false;
    for (auto crit : {ThresholdCriterion::kIterated, ThresholdCriterion::kSingleStep}) {
      for (auto fam : {InputFamily::kBinary, InputFamily::kWerner}) {
        auto t0 = Clock::now();
        ThresholdReport r = threshold_find(map, crit, fam);
        double dt = seconds_since(t0);
        bool hit = r.bracket_ok && std::abs(r.critical_noise - target[steps - 1]) <= 0.005 &&
                   dt < 60;
        any = any || hit;
        c.details.push_back("    " + std::string(hit ? "hit  " : "     ") + std::to_string(steps) +
                            " step(s), " + std::string(family_name(fam)) + ", " +
                            std::string(criterion_name(crit)) + ": " +
                            std::to_string(100 * r.critical_noise) + "% in " +
                            std::to_string(dt) + " s");
      }
    }
    c.note(any, "%d step(s): at least one family within tolerance", steps);
  }
  return c;
}

Criterion resource_fidelities() {
  Criterion c{"resource fidelity at threshold (G3 92.3%, G5 76.1%, +-0.003)"};
  struct Row {
    const char* name;
    double p, target;
  } rows[] = {{"G3+", 0.965, 0.923}, {"G5+", 0.929, 0.761}};
  for (const auto& r : rows) {
    double f = resource_fidelity(named_resource(r.name), r.p);
    c.note(std::abs(f - r.target) <= 0.003, "%s at p = %.3f: %.5f (target %.3f)", r.name, r.p, f,
           r.target);
  }
  return c;
}

struct TableRow {
  int levels;
  double km, fidelity, overhead;
};

Criterion repeater_table(const char* title, int steps, double noise,
                         const std::vector<TableRow>& rows) {
  Criterion c{title};
  auto t0 = Clock::now();
  for (const auto& row : rows) {
    RepeaterConfig cfg;
    cfg.levels = row.levels;
    cfg.total_distance = row.km;
    cfg.steps = steps;
    cfg.noise_p = 1 - noise;
    try {
      RepeaterResult res = run_repeater(cfg);
      double dpp = 100 * (res.fidelity - row.fidelity);
      double ratio = res.cost.overhead / row.overhead;
      c.note(std::abs(dpp) <= 0.3, "%d levels, %5.0f km: F = %.2f%% (target %.2f%%, %+.2f pp)",
             row.levels, row.km, 100 * res.fidelity, 100 * row.fidelity, dpp);
      c.note(ratio <= 3 && ratio >= 1.0 / 3, "%d levels, %5.0f km: overhead %.3g (target %.3g, x%.2f)",
             row.levels, row.km, res.cost.overhead, row.overhead, ratio);
    } catch (const ChainBrokenError& e) {
      c.note(false, "%d levels, %5.0f km: %s", row.levels, row.km, e.what());
    }
  }
  double dt = seconds_since(t0);
  c.note(dt < 300, "runtime %.3f s", dt);
  return c;
}

Criterion oracle_equivalence() {
  Criterion c{"oracle equivalence (fast vs dense, measurement-based vs gate-based, 1e-10)"};
  c.add_suite(check_oracle_equivalence());
  c.add_suite(check_noiseless_reduction());
  return c;
}

Criterion graph_rules() {
  Criterion c{"graph-rule correctness (200 measurement cases, LC identity n <= 6)"};
  c.add_suite(check_measurement_rules(200, 8, 2026));
  c.add_suite(check_lc_identity(6));
  return c;
}

Criterion compilation() {
  Criterion c{"resource compilation (GHZ, six resources, 50 random circuits, read-in table)"};
  c.add_suite(check_ghz_equivalence());
  std::vector<ResourceState> resources;
  for (const auto& name : resource_names()) resources.push_back(named_resource(name));
  c.note(resources.size() == 6, "%zu named resources", resources.size());
  c.add_suite(check_resources(resources));
  c.add_suite(check_random_circuits(50, 2026));
  c.add_suite(check_readin_table());
  return c;
}

Criterion variant_accounting() {
  Criterion c{"variant accounting (Monte-Carlo 1e6 trials within 3 SE, V2 >= V1)"};
  c.add_suite(check_variant_accounting(1000000, 2026));
  return c;
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  int failed = 0;
  auto run = [&](Criterion (*fn)()) {
    Criterion c = fn();
    c.report();
    failed += c.ok ? 0 : 1;
  };
  run(thresholds);
  run(resource_fidelities);
  run(+[] {
    return repeater_table("repeater, one step per level, 1% noise (F +-0.3 pp, overhead x3)", 1,
                          0.01,
                          {{3, 1000, 0.9540, 1.42e5},
                           {4, 1000, 0.9540, 3.48e3},
                           {5, 5000, 0.9248, 2.13e7},
                           {6, 5000, 0.9476, 8.34e4},
                           {6, 10000, 0.9188, 6.90e7},
                           {7, 10000, 0.9450, 2.35e5},
                           {8, 20000, 0.9426, 6.75e5}});
  });
  run(+[] {
    return repeater_table("repeater, two steps per level, 4% noise (F +-0.3 pp, overhead x3)", 2,
                          0.04,
                          {{3, 1000, 0.9181, 1.10e7},
                           {4, 1000, 0.9163, 4.36e6},
                           {5, 5000, 0.9098, 4.55e10},
                           {6, 5000, 0.9125, 9.99e8},
                           {6, 10000, 0.9095, 7.41e11},
                           {7, 10000, 0.9114, 1.57e10},
                           {8, 20000, 0.9107, 2.30e11}});
  });
  run(oracle_equivalence);
  run(graph_rules);
  run(compilation);
  run(variant_accounting);
  std::printf("%d of 8 criteria failed, %.1f s\n", failed, seconds_since(t0));
  return failed == 0 ? 0 : 1;
}
