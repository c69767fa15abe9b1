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

#ifndef MBQR_GRAPH_STATE_H_
#define MBQR_GRAPH_STATE_H_

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "mbqr/graph.h"
#include "mbqr/local_clifford.h"
#include "mbqr/pauli.h"
#include "mbqr/state_vector.h"

namespace mbqr {

// (tensor of corrections) |graph>.
struct GraphState {
  Graph graph;
  std::vector<LocalClifford> corrections;

  GraphState() = default;
  explicit GraphState(Graph g);
  GraphState(Graph g, std::vector<LocalClifford> c);

  std::size_t size() const { return graph.vertex_count(); }
  // Generators C K_G^(a) C^dag, one per vertex.
  std::vector<PauliString> stabilizer_generators() const;

  // Edge-list text followed by "LC v NAME" lines for non-identity corrections.
  std::string to_text() const;
  static GraphState from_text(const std::string& text);

  bool operator==(const GraphState&) const = default;
};

// Stabilizer measurement probabilities are always 0, 1/2 or 1.
enum class Probability { kZero, kHalf, kOne };
double to_double(Probability p);

struct MeasurementResult {
  Probability probability;
  // Empty when the outcome has probability zero.
  std::optional<GraphState> state;
};

// Per-vertex corrections U with |tau_a(G)> = U |G>.
std::vector<LocalClifford> lc_correction(const Graph& g, std::size_t a);

// Applies tau_a to the graph and absorbs U^dag into the corrections, so the
// represented state is unchanged.
GraphState local_complement(const GraphState& gs, std::size_t a);

// Projects the physical qubit a onto the outcome (+1/-1) eigenspace of the
// given Pauli and removes it. Vertices above a shift down by one.
MeasurementResult measure_pauli(const GraphState& gs, std::size_t a, Pauli basis, int outcome);

struct SampledMeasurement {
  int outcome;
  GraphState state;
};
SampledMeasurement measure_pauli_sampled(const GraphState& gs, std::size_t a, Pauli basis,
                                         std::mt19937_64& rng);

// Removes vertex a by a Z measurement. The outcome only changes Pauli
// corrections on the former neighbors.
GraphState z_decouple(const GraphState& gs, std::size_t a, int outcome = +1);

StateVector to_statevector(const GraphState& gs);
StateVector to_statevector(const Graph& g);

}  // namespace mbqr

#endif  // MBQR_GRAPH_STATE_H_
