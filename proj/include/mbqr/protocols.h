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

#ifndef MBQR_PROTOCOLS_H_
#define MBQR_PROTOCOLS_H_

#include <string>
#include <string_view>
#include <vector>

#include "mbqr/circuit.h"
#include "mbqr/resource.h"

namespace mbqr {

// Local rotation used by each party in an Oxford step. kXRotation applies
// Rx(+pi/2) to both qubits at A and Rx(-pi/2) at B. kZZRotation applies
// exp(-+i pi/4 Z(x)Z) to the party's two qubits.
enum class OxfordVariant { kXRotation, kZZRotation };
std::string_view variant_name(OxfordVariant v);
OxfordVariant parse_variant(std::string_view s);

// Rotation, bilateral CNOT half and target projection (check id given).
void append_oxford_step(CliffordCircuit* c, Side side, std::size_t control, std::size_t target,
                        OxfordVariant v, const std::string& check_id);
// Bell measurement of (l, r): CNOT l->r, H l, then frame projections.
void append_bell_measurement(CliffordCircuit* c, std::size_t l, std::size_t r);

// One party's side of `steps` nested Oxford rounds on 2^steps pairs; the
// surviving pair is qubit 0. Check ids are prefix + round + block letter.
CliffordCircuit purification_circuit(Side side, int steps, OxfordVariant v,
                                     const std::string& prefix = "s");
// Middle station: purify left pairs (as side B, prefix "L"), right pairs (as
// side A, prefix "R"), then Bell-measure the two survivors. No outputs.
CliffordCircuit swap_circuit(int steps, OxfordVariant v);

// Check id of round r (1-based), block j, for the given prefix and depth.
std::string check_id(const std::string& prefix, int steps, int round, std::size_t block);

// The named resources: G3+, G3-, G4, G5+, G5-, G8.
const std::vector<std::string>& resource_names();
CliffordCircuit named_circuit(std::string_view name, OxfordVariant v = OxfordVariant::kXRotation);
ResourceState named_resource(std::string_view name, OxfordVariant v = OxfordVariant::kXRotation);

}  // namespace mbqr

#endif  // MBQR_PROTOCOLS_H_
