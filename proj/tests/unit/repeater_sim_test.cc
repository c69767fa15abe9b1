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

#include <cmath>
#include <vector>

#include "doctest.h"
#include "mbqr/repeater.h"

using namespace mbqr;

TEST_CASE("channel fidelity") {
  for (double d : {0.0, 100.0, 5000.0}) {
    CHECK(channel_fidelity(ChannelModel::ideal(), d) == doctest::Approx(1.0));
  }
  ChannelModel cm;
  CHECK(cm.transmission(100) == doctest::Approx(std::pow(10.0, -1.6)));
  double f0 = channel_fidelity(cm, 0);
  CHECK(f0 < 1.0);
  CHECK(f0 > 0.98);
  CHECK(channel_fidelity(cm, 100) < f0);
  auto pair = channel_pair(cm, 50);
  CHECK(pair.w[2] == 0);
  CHECK(pair.w[1] == doctest::Approx(1 - pair.fidelity()));
  ChannelModel bad;
  bad.eta = 1.5;
  CHECK_THROWS_WITH_AS(bad.validate(), doctest::Contains("eta"), std::invalid_argument);
}

TEST_CASE("perfect swap") {
  auto p = swap(BellDiagonalState::perfect(), BellDiagonalState::perfect());
  CHECK(p.fidelity() == 1.0);
  auto a = BellDiagonalState::from_weights({0.7, 0.1, 0.15, 0.05});
  auto b = BellDiagonalState::from_weights({0.8, 0.05, 0.05, 0.1});
  auto c = BellDiagonalState::werner(0.9);
  auto ab = swap(a, b), ba = swap(b, a);
  auto left = swap(swap(a, b), c), right = swap(a, swap(b, c));
  for (int k = 0; k < 4; ++k) {
    CHECK(ab.w[k] == doctest::Approx(ba.w[k]));
    CHECK(left.w[k] == doctest::Approx(right.w[k]));
  }
  auto bin = swap(BellDiagonalState::binary(0.9), BellDiagonalState::binary(0.8));
  CHECK(bin.fidelity() == doctest::Approx(0.9 * 0.8 + 0.1 * 0.2));
}

TEST_CASE("resource-mode swap agrees with the dense simulation") {
  Network net = integrated_network(1);
  auto t = build_error_effects(net);
  std::vector<BellDiagonalState> two(2, BellDiagonalState::binary(0.95));
  auto fast = swap(t, 0.99, two, two);
  auto exact = mb_purify_exact(net, 0.99, std::vector<BellDiagonalState>(4, BellDiagonalState::binary(0.95)));
  CHECK(fast.success_probability == doctest::Approx(exact.success_probability).epsilon(1e-10));
  CHECK(fast.output.fidelity() == doctest::Approx(exact.output.fidelity()).epsilon(1e-10));
  CHECK(fast.output.fidelity() > 0.9);
}

TEST_CASE("overhead formula") {
  CHECK(overhead(8, 2, 1) == 8);
  CHECK(overhead(8, 2, 4) == 512);
  CHECK(overhead(16, 2, 2) == 256);
  CHECK(overhead(27, 3, 3) == doctest::Approx(27.0 * 27.0));
  CHECK_THROWS_AS(overhead(12, 2, 2), std::invalid_argument);
}

TEST_CASE("ideal repeater") {
  for (int steps : {1, 2}) {
    RepeaterConfig cfg;
    cfg.channel = ChannelModel::ideal();
    cfg.noise_p = 1.0;
    cfg.steps = steps;
    cfg.levels = 4;
    auto r = run_repeater(cfg);
    for (double f : r.level_fidelity) CHECK(f == doctest::Approx(1.0));
    double m = 1 << steps;
    CHECK(r.cost.overhead == doctest::Approx(std::pow(m, 4)));
    CHECK(r.cost.elementary_pairs_consumed == doctest::Approx(overhead(16, 2, m)));
  }
}

TEST_CASE("noiseless single level without purification is a swap") {
  RepeaterConfig cfg;
  cfg.noise_p = 1.0;
  cfg.steps = 0;
  cfg.levels = 1;
  cfg.total_distance = 400;
  auto r = run_repeater(cfg);
  auto half = channel_pair(cfg.channel, 200);
  CHECK(r.fidelity == doctest::Approx(swap(half, half).fidelity()).epsilon(1e-12));
  cfg.integrated_swapping = false;
  CHECK(run_repeater(cfg).fidelity == doctest::Approx(swap(half, half).fidelity()).epsilon(1e-12));
}

TEST_CASE("level recursion matches the closed-form overhead for uniform M") {
  RepeaterConfig cfg;
  cfg.channel = ChannelModel::ideal();
  cfg.noise_p = 1.0;
  cfg.levels = 3;
  auto r = run_repeater(cfg);
  double m = r.cost.level_m[0];
  for (double x : r.cost.level_m) CHECK(x == doctest::Approx(m));
  CHECK(r.cost.elementary_pairs_consumed == doctest::Approx(overhead(8, 2, m)));
}

TEST_CASE("more levels help at fixed distance") {
  for (int steps : {1, 2}) {
    RepeaterConfig cfg;
    cfg.steps = steps;
    cfg.noise_p = steps == 1 ? 0.99 : 0.96;
    for (auto [d, n] : std::vector<std::pair<double, int>>{{5000, 5}, {10000, 6}}) {
      cfg.total_distance = d;
      cfg.levels = n;
      double fewer = run_repeater(cfg).fidelity;
      cfg.levels = n + 1;
      CHECK(run_repeater(cfg).fidelity >= fewer);
    }
  }
}

TEST_CASE("broken chains name the level") {
  RepeaterConfig cfg;
  cfg.noise_p = 0.9;
  cfg.levels = 3;
  cfg.total_distance = 1000;
  try {
    run_repeater(cfg);
    FAIL("expected a broken chain");
  } catch (const ChainBrokenError& e) {
    CHECK(e.level() >= 1);
    CHECK(e.fidelity() <= 0.5);
  }
  RepeaterConfig bad;
  bad.levels = 0;
  CHECK_THROWS_WITH_AS(run_repeater(bad), doctest::Contains("levels"), std::invalid_argument);
}

TEST_CASE("variant costs") {
  for (auto v : {Variant::kV1, Variant::kV2, Variant::kV3}) {
    CHECK(variant_cost(v, {1, 1, 1}, 1) == doctest::Approx(4));
    CHECK(variant_cost(v, {0.5}, 1) == doctest::Approx(4));
  }
  double q = 0.7;
  CHECK(variant_cost(Variant::kV2, {q, q, q}, 1) == doctest::Approx(4 / (q * q * q)));
  CHECK(variant_cost(Variant::kV1, {q, q, q}, 1) < variant_cost(Variant::kV2, {q, q, q}, 1));
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      std::vector<double> qs = {0.1 * i, 0.1 * j, 0.05 + 0.09 * i};
      double v1 = variant_cost(Variant::kV1, qs, 1), v2 = variant_cost(Variant::kV2, qs, 1);
      double v3 = variant_cost(Variant::kV3, qs, 1);
      CHECK(v1 <= v2 * (1 + 1e-12));
      CHECK(v1 <= v3 * (1 + 1e-12));
      CHECK(v3 <= v2 * (1 + 1e-12));
      if (i < 10 || j < 10) CHECK(v1 < v2);
    }
  }
  CHECK_THROWS_AS(variant_cost(Variant::kV1, {0.0, 1, 1}, 1), std::domain_error);
  CHECK_THROWS_AS(variant_cost(Variant::kV1, {0.5, 0.5}, 1), std::invalid_argument);
  CHECK(parse_repeater_variant("V3") == Variant::kV3);
}

TEST_CASE("variant closed forms agree with Monte Carlo") {
  for (auto v : {Variant::kV1, Variant::kV2, Variant::kV3}) {
    for (double pb : {1.0, 0.9}) {
      std::vector<double> qs = {0.6, 0.75, 0.5};
      auto est = variant_cost_mc(v, qs, pb, 200000, 11);
      INFO(variant_name(v), " p_bell ", pb);
      CHECK(std::abs(est.mean - variant_cost(v, qs, pb)) < 4 * est.standard_error);
    }
  }
}

TEST_CASE("sweep") {
  RepeaterConfig cfg;
  cfg.noise_p = 0.99;
  SweepSpec spec;
  spec.d_min = 1000;
  spec.d_max = 5000;
  spec.points = 5;
  spec.levels_min = 5;
  spec.levels_max = 6;
  auto rows = sweep(cfg, spec);
  REQUIRE(rows.size() == 10);
  CHECK(rows.front().distance_km == doctest::Approx(1000));
  CHECK(rows.back().distance_km == doctest::Approx(5000));
  for (std::size_t i = 1; i < 5; ++i) CHECK(rows[i].fidelity < rows[i - 1].fidelity);
  std::string csv = sweep_csv(rows);
  CHECK(csv.rfind("distance_km,levels,steps_per_level,noise,fidelity,overhead\n", 0) == 0);
  CHECK(csv == sweep_csv(sweep(cfg, spec)));
}
