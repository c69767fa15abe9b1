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

#ifndef MBQR_STABILIZER_STATE_H_
#define MBQR_STABILIZER_STATE_H_

#include <optional>
#include <vector>

#include "mbqr/local_clifford.h"
#include "mbqr/pauli.h"
#include "mbqr/state_vector.h"

namespace mbqr {

// In-place conjugation of a Pauli string by two-qubit Clifford gates.
void conjugate_cnot(std::size_t c, std::size_t t, PauliString* p);
void conjugate_cz(std::size_t a, std::size_t b, PauliString* p);
// exp(-i sign pi/4 Z_a Z_b).
void conjugate_zz(std::size_t a, std::size_t b, int sign, PauliString* p);

// Pure stabilizer state given by n independent commuting Hermitian generators.
class StabilizerState {
 public:
  // |0...0>.
  explicit StabilizerState(std::size_t n);
  // Throws std::invalid_argument unless the generators describe a pure state.
  explicit StabilizerState(std::vector<PauliString> generators);

  std::size_t qubit_count() const { return n_; }
  const std::vector<PauliString>& generators() const { return gens_; }

  void apply(std::size_t q, const LocalClifford& c);
  void apply_h(std::size_t q) { apply(q, LocalClifford::from_name("H")); }
  void apply_cz(std::size_t a, std::size_t b);
  void apply_cnot(std::size_t c, std::size_t t);
  // exp(-i sign pi/4 Z_a Z_b), sign = +1 or -1.
  void apply_zz_rotation(std::size_t a, std::size_t b, int sign);
  void apply_pauli(const PauliString& p);

  // Projects qubit q onto |bit>. Returns the probability of that branch
  // (0, 1/2 or 1); the state is left unchanged when it is 0.
  double postselect_z(std::size_t q, int bit);
  // Drops qubit q, which must be in a Z eigenstate.
  void remove_qubit(std::size_t q);
  // New qubit i is old qubit order[i]; order must be a permutation.
  void permute(const std::vector<std::size_t>& order);

  // If +-p (or +-i p) lies in the stabilizer group, returns the phase power
  // k with i^k * letters(p) in the group; otherwise nullopt.
  std::optional<int> group_phase(const PauliString& p) const;
  bool contains(const PauliString& p) const;
  // Same state (same stabilizer group).
  bool same_state(const StabilizerState& other) const;

  StateVector to_statevector() const;

 private:
  void check_qubit(std::size_t q) const;

  std::size_t n_;
  std::vector<PauliString> gens_;
};

}  // namespace mbqr

#endif  // MBQR_STABILIZER_STATE_H_
