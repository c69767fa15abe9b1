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

#ifndef MBQR_RESOURCE_H_
#define MBQR_RESOURCE_H_

#include <string>
#include <vector>

#include "mbqr/circuit.h"
#include "mbqr/graph_state.h"
#include "mbqr/pauli.h"
#include "mbqr/stabilizer_state.h"

namespace mbqr {

// Choi state of a circuit on the reference projection branch. Qubit order:
// one reference qubit per circuit input (in input order), then the outputs.
StabilizerState jamiolkowski_state(const CliffordCircuit& c);

// Graph form of a stabilizer state: the returned GraphState represents the
// same state up to global phase.
GraphState stabilizer_to_graph(const StabilizerState& st);

struct VertexRole {
  enum class Kind { kInput, kOutput };
  Kind kind;
  Side side;
  std::size_t index;          // position among inputs or outputs
  std::size_t circuit_qubit;  // the circuit qubit this vertex stands for
  std::string str() const;
  bool operator==(const VertexRole&) const = default;
};

struct ResourceState {
  std::string name;
  GraphState graph_state;
  std::vector<VertexRole> roles;  // one per vertex
  CliffordCircuit source;

  std::size_t input_count() const { return source.inputs().size(); }
  std::size_t output_count() const { return source.outputs().size(); }
  // Vertex of input i / output j.
  std::size_t input_vertex(std::size_t i) const { return i; }
  std::size_t output_vertex(std::size_t j) const { return input_count() + j; }

  // Plain-text export: "RESOURCE name", "VERTICES n", "EDGE a b",
  // "LC v NAME" and "ROLE v IN|OUT side index" lines.
  std::string to_text() const;
  // Parses to_text() output; the source circuit must be supplied separately.
  static ResourceState from_text(const std::string& text, CliffordCircuit source);
};

ResourceState compile_resource(const CliffordCircuit& c, std::string name = "");

struct ByproductRecord {
  // Effective projected bit for each projection, in circuit order.
  std::vector<int> effective_projections;
  // Whether each projection was flipped relative to the reference branch.
  std::vector<bool> flips;
  // Pauli correction on the outputs (output order), phase dropped.
  PauliString output_correction;
};

// Pushes a Pauli acting before the circuit (on circuit qubits) through it.
ByproductRecord propagate_byproduct(const CliffordCircuit& c, const PauliString& before);

// Bell read-in with outcome k (sigma_k in I, X, Y, Z) for each input.
ByproductRecord bell_readin(const ResourceState& r, const std::vector<int>& outcomes);

struct VerifyReport {
  bool ok = false;
  double max_deviation = 0;
  std::size_t patterns_checked = 0;
  std::string detail;
};

// Checks that Bell read-in on the resource followed by the byproduct
// correction reproduces the circuit (with effective projections) for every
// outcome pattern and a few random input states. Needs inputs + outputs <= 12
// and circuit qubits <= 12.
VerifyReport verify_resource(const ResourceState& r, const CliffordCircuit& c,
                             int random_inputs = 3, std::uint64_t seed = 1);

}  // namespace mbqr

#endif  // MBQR_RESOURCE_H_
