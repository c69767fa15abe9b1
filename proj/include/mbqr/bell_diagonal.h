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

#ifndef MBQR_BELL_DIAGONAL_H_
#define MBQR_BELL_DIAGONAL_H_

#include <array>
#include <string>

#include "mbqr/pauli.h"

namespace mbqr {

// Bell labels index the weight vector. A label is the Pauli that maps
// phi+ to the state when applied to the first qubit:
// 0 = phi+ (I), 1 = phi- (Z), 2 = psi+ (X), 3 = psi- (Y).
// Bit 1 is the X component and bit 0 the Z component, so composing Paulis is
// XOR of labels.
inline int bell_label(Pauli p) { return (x_bit(p) ? 2 : 0) | (z_bit(p) ? 1 : 0); }
inline Pauli label_pauli(int label) { return pauli_from_bits(label & 2, label & 1); }

struct BellDiagonalState {
  std::array<double, 4> w{1.0, 0.0, 0.0, 0.0};

  static BellDiagonalState perfect() { return {}; }
  static BellDiagonalState werner(double f);
  static BellDiagonalState binary(double f);
  static BellDiagonalState maximally_mixed() { return {{0.25, 0.25, 0.25, 0.25}}; }
  static BellDiagonalState from_weights(std::array<double, 4> w);

  double fidelity() const { return w[0]; }
  // Throws std::invalid_argument unless nonnegative and summing to one
  // within 1e-12.
  void validate() const;
  std::string str() const;
};

// Single-qubit local white noise as a Pauli channel, indexed by Bell label:
// identity with (1 + 3p)/4, each Pauli with (1 - p)/4.
std::array<double, 4> lwn_channel(double p);

// Pauli-label convolution: the distribution of a xor b.
std::array<double, 4> convolve(const std::array<double, 4>& a, const std::array<double, 4>& b);

// Local white noise on `qubits` (1 or 2) halves of the pair.
BellDiagonalState apply_lwn(const BellDiagonalState& s, double p, int qubits = 2);

// Entanglement swapping by a perfect Bell measurement.
BellDiagonalState swap_perfect(const BellDiagonalState& ab, const BellDiagonalState& bc);

}  // namespace mbqr

#endif  // MBQR_BELL_DIAGONAL_H_
