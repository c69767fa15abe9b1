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

#ifndef MBQR_PURIFICATION_H_
#define MBQR_PURIFICATION_H_

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "mbqr/bell_diagonal.h"
#include "mbqr/protocols.h"
#include "mbqr/resource.h"

namespace mbqr {

struct PurificationResult {
  double success_probability = 0;
  BellDiagonalState output;  // success-conditioned
};

// Gate-based Oxford step on two Bell-diagonal pairs; pair1 is kept. Dense
// four-qubit simulation with acceptance on coinciding target outcomes.
PurificationResult oxford_map(const BellDiagonalState& pair1, const BellDiagonalState& pair2,
                              OxfordVariant v = OxfordVariant::kXRotation);

// Input `index` of party `party`.
struct PartyPort {
  std::size_t party = 0;
  std::size_t index = 0;
};

// A pair shared by two input ports. Pair errors are referred to `first`.
struct Link {
  PartyPort first;
  PartyPort second;
};

// Resource states wired together by input pairs. The final pair is output
// `out_first` of one party and `out_second` of another.
struct Network {
  std::string name;
  std::vector<ResourceState> parties;
  std::vector<Link> links;
  PartyPort out_first;
  PartyPort out_second;

  std::size_t vertex_count() const;
  // Throws std::invalid_argument unless every input is linked exactly once,
  // each check id is shared by exactly two parties and the only outputs are
  // the two final ones.
  void validate() const;
};

// End-station purification with `steps` nested rounds (G3+/G3- or G5+/G5-).
// Links are the pairs in order; link 0 survives.
Network purification_network(int steps, OxfordVariant v = OxfordVariant::kXRotation);
// Purification of both neighbouring segments fused with the swap at the
// middle station (G3+/G4/G3- or G5+/G8/G5-). Links: left pairs, then right.
Network integrated_network(int steps, OxfordVariant v = OxfordVariant::kXRotation);

// Pauli-error picture of a network. A group element packs the final pair's
// Bell label in bits 0-1 and one syndrome bit per check id above it. Each
// resource qubit and link maps a Pauli (by Bell label) to an element.
struct ErrorEffectTable {
  std::string name;
  std::vector<std::string> check_ids;
  std::vector<std::string> qubit_names;
  std::vector<std::array<std::uint32_t, 4>> qubit_effects;
  std::vector<std::array<std::uint32_t, 4>> link_effects;

  std::size_t group_size() const { return std::size_t{4} << check_ids.size(); }
  // Throws std::invalid_argument on out-of-group entries or identity
  // entries with a nonzero effect.
  void validate() const;
};

ErrorEffectTable build_error_effects(const Network& net);

// Local white noise p on every resource qubit, inputs[l] on link l.
// Convolution over the effect group, conditioned on a zero syndrome.
PurificationResult mb_purify_fast(const ErrorEffectTable& effects, double p,
                                  const std::vector<BellDiagonalState>& inputs);
// Distribution over the effect group before conditioning.
std::vector<double> effect_distribution(const ErrorEffectTable& effects, double p,
                                        const std::vector<BellDiagonalState>& inputs);
// Probability that the syndrome bits selected by `check_mask` (bit i for
// check i) are all zero.
double checks_pass_probability(const std::vector<double>& dist, std::uint64_t check_mask);
// Mask of the checks whose id ends in `suffix`.
std::uint64_t checks_with_suffix(const ErrorEffectTable& effects, std::string_view suffix);

// Dense density-matrix simulation of the same process: noisy resource
// states, Bell read-in of every outcome pattern, byproduct correction and
// post-selection. Limited to kDenseQubitLimit resource qubits in total.
PurificationResult mb_purify_exact(const Network& net, double p,
                                   const std::vector<BellDiagonalState>& inputs);
inline constexpr std::size_t kDenseQubitLimit = 12;

// <psi| rho |psi> for the resource under local white noise p. Exact sum
// over the stabilizer group.
double resource_fidelity(const ResourceState& r, double p);
// Same quantity by dense simulation (at most kDenseQubitLimit qubits).
double resource_fidelity_dense(const ResourceState& r, double p);

enum class InputFamily { kWerner, kBinary };
std::string_view family_name(InputFamily f);
InputFamily parse_family(std::string_view s);
BellDiagonalState family_state(InputFamily f, double fidelity);

// One purification round applied to copies of a single pair at noise p.
using PurificationMap = std::function<PurificationResult(const BellDiagonalState&, double)>;
PurificationMap network_map(const ErrorEffectTable& effects);
// `inner` on two pairs, then `outer` on the two results.
PurificationMap chained_map(PurificationMap inner, PurificationMap outer);

enum class ThresholdCriterion {
  // Iterate from a perfect pair; purification works if the limit keeps
  // F > 1/2.
  kIterated,
  // Some F on the input grid gains in a single round.
  kSingleStep,
};
std::string_view criterion_name(ThresholdCriterion c);
ThresholdCriterion parse_criterion(std::string_view s);

struct FixedPoint {
  double fidelity = 0;
  BellDiagonalState state;
  int iterations = 0;
  bool converged = false;
};

// Iterates the map from family_state(family, f0) until |dF| < tol.
FixedPoint fixed_point_fidelity(const PurificationMap& map, double p, double f0 = 0.95,
                                InputFamily family = InputFamily::kBinary, double tol = 1e-9,
                                int max_iterations = 10000);

// Largest single-round gain F' - F over a grid of `grid` fidelities inside
// (1/2, 1).
double purification_gain(const PurificationMap& map, double p, InputFamily family, int grid = 64);

struct ThresholdReport {
  double critical_noise = 0;  // 1 - p*
  double critical_p = 0;
  bool bracket_ok = false;
  std::string diagnostic;
};

// Bisection on p in [p_low, 1] to absolute tolerance `tol`. Ties count as
// no gain.
ThresholdReport threshold_find(const PurificationMap& map, ThresholdCriterion criterion,
                               InputFamily family, double p_low = 0.85, double tol = 1e-6);

struct ScanRow {
  std::string protocol;
  std::string family;
  double p = 0;
  double f_in = 0;
  double f_out = 0;
  double p_success = 0;
};
// One round at each (p, F) grid point.
std::vector<ScanRow> purification_scan(const PurificationMap& map, const std::string& protocol,
                                       InputFamily family, const std::vector<double>& ps,
                                       const std::vector<double>& fs);
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace mbqr

#endif  // MBQR_PURIFICATION_H_
