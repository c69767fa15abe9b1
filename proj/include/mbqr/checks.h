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

#ifndef MBQR_CHECKS_H_
#define MBQR_CHECKS_H_

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mbqr/circuit.h"
#include "mbqr/protocols.h"
#include "mbqr/resource.h"

namespace mbqr {

// Outcome of one verification suite.
struct SuiteResult {
  explicit SuiteResult(std::string suite_name = "") : name(std::move(suite_name)) {}

  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  double max_deviation = 0;
  std::vector<std::string> failed;  // short descriptions, capped

  bool ok() const { return failures == 0 && cases > 0; }
  void fail(const std::string& what);
};

// Graph-rule Pauli measurements against state-vector projection on random
// graph states with 2..max_vertices vertices.
SuiteResult check_measurement_rules(std::size_t cases, std::size_t max_vertices,
                                    std::uint64_t seed);
// Local complementation as a local unitary, for every graph up to
// max_vertices vertices and every vertex.
SuiteResult check_lc_identity(std::size_t max_vertices);
// The compiled one-step resource is GHZ up to local Cliffords.
SuiteResult check_ghz_equivalence(OxfordVariant v = OxfordVariant::kXRotation);
// verify_resource for each resource against its own source circuit.
SuiteResult check_resources(const std::vector<ResourceState>& resources, int random_inputs = 2);
// Compile and verify random two-qubit Clifford circuits.
SuiteResult check_random_circuits(std::size_t count, std::uint64_t seed);
// Bell read-in of the two-step circuits against the logical table composed
// round by round, for all 256 outcome patterns on both sides.
SuiteResult check_readin_table();
// mb_purify_fast against mb_purify_exact on every network within the dense
// limit, p in {1, .99, .96, .93}, F in {.6, .8, .95}.
SuiteResult check_oracle_equivalence();
// Noiseless measurement-based rounds against the gate-based Oxford map on a
// 5x5 fidelity grid.
SuiteResult check_noiseless_reduction();
// Variant cost closed forms against Monte Carlo (3 standard errors) and the
// V2 >= V1 ordering on a 10x10 grid.
SuiteResult check_variant_accounting(std::uint64_t trials, std::uint64_t seed);

CliffordCircuit random_two_qubit_circuit(std::mt19937_64& rng);

}  // namespace mbqr

#endif  // MBQR_CHECKS_H_
