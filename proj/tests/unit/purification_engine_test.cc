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
#include "mbqr/bell_diagonal.h"
#include "mbqr/dense.h"
#include "mbqr/purification.h"

using namespace mbqr;

namespace {

double max_gap(const PurificationResult& a, const PurificationResult& b) {
  double d = std::abs(a.success_probability - b.success_probability);
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a.output.w[k] - b.output.w[k]));
  return d;
}

void check_normalized(const BellDiagonalState& s) {
  double sum = 0;
  for (double x : s.w) {
    CHECK(x >= 0);
    sum += x;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
}

// Mixed families so both X and Z type errors are exercised.
std::vector<BellDiagonalState> grid_inputs(std::size_t n, double f) {
  std::vector<BellDiagonalState> in;
  for (std::size_t l = 0; l < n; ++l) {
    if (l % 3 == 0) {
      in.push_back(BellDiagonalState::binary(f));
    } else if (l % 3 == 1) {
      in.push_back(BellDiagonalState::werner(f));
    } else {
      double r = 1 - f;
      in.push_back(BellDiagonalState::from_weights({f, 0.5 * r, 0.3 * r, 0.2 * r}));
    }
  }
  return in;
}

}  // namespace

TEST_CASE("Bell-diagonal helpers") {
  auto w = BellDiagonalState::werner(0.7);
  CHECK(w.w[1] == doctest::Approx(0.1));
  CHECK_THROWS_AS(BellDiagonalState::binary(1.2), std::invalid_argument);
  CHECK_THROWS_AS(BellDiagonalState::from_weights({0.5, 0.6, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(lwn_channel(-0.1), std::invalid_argument);
  // Binary swap: F1 F2 + (1 - F1)(1 - F2).
  auto s = swap_perfect(BellDiagonalState::binary(0.9), BellDiagonalState::binary(0.8));
  CHECK(s.fidelity() == doctest::Approx(0.9 * 0.8 + 0.1 * 0.2));
  CHECK(s.w[2] == 0);
  // Two-sided noise equals the dense channel on both qubits.
  auto x = BellDiagonalState::from_weights({0.7, 0.1, 0.15, 0.05});
  DensityMatrix rho = bell_density(x);
  apply_lwn(&rho, 0, 0.9);
  apply_lwn(&rho, 1, 0.9);
  auto dense = bell_weights(rho);
  auto fast = apply_lwn(x, 0.9);
  for (int k = 0; k < 4; ++k) CHECK(fast.w[k] == doctest::Approx(dense[k]).epsilon(1e-12));
  CHECK(bell_offdiagonal(rho) < 1e-12);
}

TEST_CASE("dense local white noise") {
  DensityMatrix zero = DensityMatrix::Zero(2, 2);
  zero(0, 0) = 1;
  for (double p : {0.0, 0.3, 1.0}) {
    DensityMatrix r = zero;
    apply_lwn(&r, 0, p);
    CHECK(r(0, 0).real() == doctest::Approx((1 + p) / 2));
    CHECK(r(1, 1).real() == doctest::Approx((1 - p) / 2));
  }
  DensityMatrix mixed = DensityMatrix::Identity(4, 4) / 4.0;
  DensityMatrix m = mixed;
  apply_lwn(&m, 1, 0.37);
  CHECK((m - mixed).norm() < 1e-15);
  // Partial-trace form equals the Pauli-channel form.
  auto x = BellDiagonalState::from_weights({0.6, 0.2, 0.15, 0.05});
  DensityMatrix a = bell_density(x), b = a;
  apply_lwn(&a, 0, 0.8);
  apply_pauli_channel(&b, 0, lwn_channel(0.8));
  CHECK((a - b).norm() < 1e-14);
  CHECK_THROWS_AS(apply_lwn(&a, 0, 1.5), std::invalid_argument);
}

TEST_CASE("oxford_map examples") {
  auto perfect = oxford_map(BellDiagonalState::perfect(), BellDiagonalState::perfect());
  CHECK(perfect.success_probability == doctest::Approx(1.0));
  CHECK(perfect.output.fidelity() == doctest::Approx(1.0));
  auto w = oxford_map(BellDiagonalState::werner(0.7), BellDiagonalState::werner(0.7));
  CHECK(w.output.fidelity() > 0.7);
  auto mixed = oxford_map(BellDiagonalState::maximally_mixed(), BellDiagonalState::maximally_mixed());
  CHECK(mixed.success_probability == doctest::Approx(0.5));
  for (double x : mixed.output.w) CHECK(x == doctest::Approx(0.25));
  // Binary input: F' = F^2 / (F^2 + (1 - F)^2) with the output on the psi+ axis.
  auto b = oxford_map(BellDiagonalState::binary(0.8), BellDiagonalState::binary(0.8));
  CHECK(b.output.fidelity() == doctest::Approx(0.64 / 0.68));
  CHECK(b.success_probability == doctest::Approx(0.68));
}

TEST_CASE("oxford_map invariants") {
  for (int i = 1; i <= 50; ++i) {
    double f = 0.5 + 0.5 * i / 51.0;
    auto r = oxford_map(BellDiagonalState::binary(f), BellDiagonalState::binary(f));
    CHECK(r.output.fidelity() > f);
    check_normalized(r.output);
  }
  auto a = BellDiagonalState::from_weights({0.7, 0.2, 0.06, 0.04});
  auto b = BellDiagonalState::from_weights({0.8, 0.05, 0.1, 0.05});
  CHECK(oxford_map(a, b).success_probability ==
        doctest::Approx(oxford_map(b, a).success_probability).epsilon(1e-12));
  // The exponential ZZ form collapses to a bilateral CNOT: no gain on binary pairs.
  auto zz = oxford_map(BellDiagonalState::binary(0.8), BellDiagonalState::binary(0.8),
                       OxfordVariant::kZZRotation);
  CHECK(zz.output.fidelity() == doctest::Approx(0.64 + 0.04));
}

TEST_CASE("networks validate their wiring") {
  Network g3 = purification_network(1);
  CHECK(g3.vertex_count() == 6);
  CHECK(g3.links.size() == 2);
  Network g5 = integrated_network(2);
  CHECK(g5.vertex_count() == 18);
  CHECK(g5.parties[1].name == "G8");
  Network broken = g3;
  broken.links.pop_back();
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  broken = g3;
  broken.out_second = {0, 0};
  CHECK_THROWS_AS(broken.validate(), std::invalid_argument);
  auto t = build_error_effects(g5);
  CHECK(t.check_ids.size() == 6);
  CHECK(t.qubit_effects.size() == 18);
  t.qubit_effects[0][0] = 1;
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);
  CHECK_THROWS_AS(mb_purify_fast(build_error_effects(g3), 0.9, grid_inputs(3, 0.9)),
                  std::invalid_argument);
  CHECK_THROWS_AS(mb_purify_exact(g5, 0.9, grid_inputs(8, 0.9)), std::invalid_argument);
}

TEST_CASE("fast path equals dense simulation") {
  for (const Network& net : {purification_network(1), purification_network(2), integrated_network(1)}) {
    auto table = build_error_effects(net);
    double worst = 0;
    for (double p : {1.0, 0.99, 0.96, 0.93}) {
      for (double f : {0.6, 0.8, 0.95}) {
        auto in = grid_inputs(net.links.size(), f);
        auto fast = mb_purify_fast(table, p, in);
        auto exact = mb_purify_exact(net, p, in);
        worst = std::max(worst, max_gap(fast, exact));
        check_normalized(fast.output);
      }
    }
    INFO(net.name);
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("noiseless measurement-based rounds equal the gate-based map") {
  Network one = purification_network(1);
  Network two = purification_network(2);
  Network swap = integrated_network(1);
  auto t2 = build_error_effects(two);
  auto tswap = build_error_effects(swap);
  const std::vector<double> fs = {0.55, 0.65, 0.75, 0.85, 0.95};
  double worst = 0;
  for (double f1 : fs) {
    for (double f2 : fs) {
      auto a = BellDiagonalState::werner(f1);
      auto b = BellDiagonalState::from_weights({f2, 0.6 * (1 - f2), 0.4 * (1 - f2), 0});
      worst = std::max(worst, max_gap(mb_purify_exact(one, 1.0, {a, b}), oxford_map(a, b)));

      auto l = oxford_map(a, b), r = oxford_map(b, a);
      PurificationResult nested = oxford_map(l.output, r.output);
      nested.success_probability *= l.success_probability * r.success_probability;
      worst = std::max(worst, max_gap(mb_purify_fast(t2, 1.0, {a, b, b, a}), nested));

      PurificationResult swapped;
      swapped.output = swap_perfect(l.output, r.output);
      swapped.success_probability = l.success_probability * r.success_probability;
      if (f1 == f2) {
        worst = std::max(worst, max_gap(mb_purify_exact(swap, 1.0, {a, b, b, a}), swapped));
      }
      worst = std::max(worst, max_gap(mb_purify_fast(tswap, 1.0, {a, b, b, a}), swapped));
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("maximally mixed inputs stay maximally mixed") {
  auto t = build_error_effects(purification_network(2));
  for (double p : {1.0, 0.9}) {
    auto r = mb_purify_fast(t, p, std::vector<BellDiagonalState>(4, BellDiagonalState::maximally_mixed()));
    for (double x : r.output.w) CHECK(x == doctest::Approx(0.25));
  }
}

TEST_CASE("resource fidelity under local white noise") {
  for (const auto& name : resource_names()) {
    ResourceState r = named_resource(name);
    CHECK(resource_fidelity(r, 1.0) == doctest::Approx(1.0));
    for (double p : {0.965, 0.9}) {
      CHECK(resource_fidelity(r, p) == doctest::Approx(resource_fidelity_dense(r, p)).epsilon(1e-12));
    }
  }
  CHECK(resource_fidelity(named_resource("G3+"), 0.965) == doctest::Approx(0.923).epsilon(0.003));
  CHECK(resource_fidelity(named_resource("G5+"), 0.929) == doctest::Approx(0.761).epsilon(0.003));
}

TEST_CASE("thresholds of the one- and two-step protocols") {
  auto one = network_map(build_error_effects(purification_network(1)));
  auto two = network_map(build_error_effects(purification_network(2)));
  for (auto family : {InputFamily::kBinary, InputFamily::kWerner}) {
    auto r1 = threshold_find(one, ThresholdCriterion::kIterated, family);
    auto r2 = threshold_find(two, ThresholdCriterion::kIterated, family);
    REQUIRE(r1.bracket_ok);
    REQUIRE(r2.bracket_ok);
    CHECK(r1.critical_noise == doctest::Approx(0.0358).epsilon(0.001 / 0.0358));
    CHECK(r2.critical_noise == doctest::Approx(0.0715).epsilon(0.001 / 0.0715));
  }
  // Chaining three-qubit resources is the one-step map iterated, so the
  // combined five-qubit resource tolerates strictly more noise.
  auto chained = chained_map(one, one);
  auto rc = threshold_find(chained, ThresholdCriterion::kIterated, InputFamily::kBinary);
  auto r2 = threshold_find(two, ThresholdCriterion::kIterated, InputFamily::kBinary);
  CHECK(r2.critical_noise > rc.critical_noise + 0.01);
  // Single-round criterion, reported alongside.
  auto s1 = threshold_find(one, ThresholdCriterion::kSingleStep, InputFamily::kBinary);
  CHECK(s1.bracket_ok);
  CHECK(s1.critical_noise > 0.04);
  // Noiseless rounds gain everywhere on the grid.
  CHECK(purification_gain(one, 1.0, InputFamily::kBinary) > 0);
}

TEST_CASE("threshold reports a broken bracket") {
  auto zz = network_map(build_error_effects(purification_network(1, OxfordVariant::kZZRotation)));
  auto r = threshold_find(zz, ThresholdCriterion::kSingleStep, InputFamily::kBinary);
  CHECK_FALSE(r.bracket_ok);
  CHECK(r.diagnostic.find("no gain at p = 1") != std::string::npos);
}

TEST_CASE("fixed points of the iterated map") {
  auto one = network_map(build_error_effects(purification_network(1)));
  auto perfect = fixed_point_fidelity(one, 1.0);
  CHECK(perfect.converged);
  CHECK(perfect.fidelity == doctest::Approx(1.0));
  auto noisy = fixed_point_fidelity(one, 0.99);
  CHECK(noisy.converged);
  CHECK(noisy.fidelity > 0.95);
  CHECK(noisy.fidelity < 1.0);
  // Just above the critical p the limit sits where the round stops gaining.
  auto th = threshold_find(one, ThresholdCriterion::kIterated, InputFamily::kBinary);
  auto edge = fixed_point_fidelity(one, th.critical_p + 1e-5, 0.95);
  CHECK(edge.converged);
  CHECK(edge.fidelity > 0.5);
  auto step = one(edge.state, th.critical_p + 1e-5).output.fidelity();
  CHECK(std::abs(step - edge.fidelity) < 1e-8);
  auto below = fixed_point_fidelity(one, th.critical_p - 1e-3, 0.95);
  CHECK(below.fidelity < 0.5);
}

TEST_CASE("measurement-based rounds near the critical noise") {
  Network g3 = purification_network(1);
  // Binary pairs still gain below the attracting fixed point.
  auto in3 = std::vector<BellDiagonalState>(2, BellDiagonalState::binary(0.85));
  CHECK(mb_purify_exact(g3, 0.965, in3).output.fidelity() > 0.85);
  auto g5 = network_map(build_error_effects(purification_network(2)));
  auto fp = fixed_point_fidelity(g5, 0.929);
  REQUIRE(fp.converged);
  CHECK(fp.fidelity > 0.75);
  CHECK(g5(fp.state, 0.929).output.fidelity() == doctest::Approx(fp.fidelity).epsilon(1e-8));
}

TEST_CASE("scan CSV") {
  auto one = network_map(build_error_effects(purification_network(1)));
  auto rows = purification_scan(one, "G3", InputFamily::kWerner, {1.0, 0.98}, {0.7, 0.9});
  REQUIRE(rows.size() == 4);
  std::string csv = scan_csv(rows);
  CHECK(csv.rfind("protocol,family,p,F_in,F_out,p_success\n", 0) == 0);
  CHECK(csv.find("G3,werner,0.98,0.9,") != std::string::npos);
  CHECK(parse_family("binary") == InputFamily::kBinary);
  CHECK_THROWS_AS(parse_family("ghz"), std::invalid_argument);
}
