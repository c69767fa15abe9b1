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

#ifndef MBQR_REPEATER_H_
#define MBQR_REPEATER_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mbqr/bell_diagonal.h"
#include "mbqr/purification.h"

namespace mbqr {

// Photonic Bell pairs sent through fibre, as a binary pair.
struct ChannelModel {
  double v_opt = 0.99;  // optical visibility
  double eta = 0.3;     // detector efficiency
  double dark = 1e-4;   // dark count probability
  double alpha = 0.16;  // attenuation in dB/km

  static ChannelModel ideal() { return {1.0, 1.0, 0.0, 0.0}; }
  // Throws std::invalid_argument naming the violated bound.
  void validate() const;
  double transmission(double km) const;
  double visibility(double km) const;
  // Expected transmissions per heralded elementary pair.
  double attempts_per_pair(double km) const;
};

double channel_fidelity(const ChannelModel& cm, double km);
BellDiagonalState channel_pair(const ChannelModel& cm, double km);

// Swap by a perfect Bell measurement.
BellDiagonalState swap(const BellDiagonalState& ab, const BellDiagonalState& bc);
// Swap fused with purification: the integrated network at noise p reads in
// `left` and `right` (2^steps pairs each).
PurificationResult swap(const ErrorEffectTable& integrated, double p,
                        const std::vector<BellDiagonalState>& left,
                        const std::vector<BellDiagonalState>& right);

// How nested purification rounds are resourced. kV1 keeps small resources
// and couples surviving pairs by extra Bell measurements, kV2 uses one
// resource for all rounds (all must succeed together), kV3 uses an enlarged
// resource with spare first-round slots.
enum class Variant { kV1, kV2, kV3 };
std::string_view variant_name(Variant v);
Variant parse_repeater_variant(std::string_view s);

struct RepeaterConfig {
  double total_distance = 1000;  // km
  int levels = 3;                // N = 2^levels segments
  int steps = 1;                 // purification rounds per level (0..2)
  bool integrated_swapping = true;
  bool final_purification = true;
  double noise_p = 0.99;  // local white noise parameter per resource qubit
  double p_bell = 1.0;    // read-in Bell measurement success probability
  Variant variant = Variant::kV2;
  ChannelModel channel;

  void validate() const;
};

struct CostAccount {
  double attempts_per_pair = 1;             // c0
  std::vector<double> level_success;        // joint success probability per level
  std::vector<double> level_m;              // pairs per segment multiplier per level
  double overhead = 1;                      // c0 * prod M_k, per elementary segment
  double elementary_pairs_consumed = 1;     // N * overhead
  double final_success = 1;                 // end-station purification
  double final_m = 1;                       // its own multiplier, not in overhead
};

struct RepeaterResult {
  double fidelity = 0;
  BellDiagonalState state;
  std::vector<double> level_fidelity;  // after each level, level 0 = channel
  CostAccount cost;
};

class ChainBrokenError : public std::runtime_error {
 public:
  ChainBrokenError(int level, double fidelity);
  int level() const { return level_; }
  double fidelity() const { return fidelity_; }

 private:
  int level_;
  double fidelity_;
};

// Expected-value recursion over the levels. Throws ChainBrokenError when a
// level ends at fidelity <= 1/2.
RepeaterResult run_repeater(const RepeaterConfig& cfg);

// N^(log_L M + 1). Throws unless N is a power of L.
double overhead(std::uint64_t n, std::uint64_t l, double m);

// Expected elementary pairs per output pair of a 2->1 (one probability) or
// 4->1 (q1, q2 for the first-round blocks, q3 for the second round)
// protocol. Each read-in pair costs p_bell^4 (two ends, both sides).
double variant_cost(Variant v, const std::vector<double>& q, double p_bell);
// Number of first-round slots of the enlarged kV3 resource.
inline constexpr int kV3Slots = 3;

struct MonteCarloEstimate {
  double mean = 0;
  double standard_error = 0;
  std::uint64_t trials = 0;
};
MonteCarloEstimate variant_cost_mc(Variant v, const std::vector<double>& q, double p_bell,
                                   std::uint64_t trials, std::uint64_t seed);

struct SweepRow {
  double distance_km = 0;
  int levels = 0;
  int steps = 0;
  double noise = 0;  // 1 - p
  double fidelity = 0;
  double overhead = 0;
};

struct SweepSpec {
  double d_min = 500;
  double d_max = 20000;
  int points = 40;
  int levels_min = 1;
  int levels_max = 8;
  bool log_spacing = true;
};

// Runs the template at every (levels, distance) point; broken chains are
// left out.
std::vector<SweepRow> sweep(const RepeaterConfig& base, const SweepSpec& spec);
std::string sweep_csv(const std::vector<SweepRow>& rows);

}  // namespace mbqr

#endif  // MBQR_REPEATER_H_
