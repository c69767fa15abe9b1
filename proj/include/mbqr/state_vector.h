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

#ifndef MBQR_STATE_VECTOR_H_
#define MBQR_STATE_VECTOR_H_

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "mbqr/local_clifford.h"
#include "mbqr/pauli.h"

namespace mbqr {

using Complex = std::complex<double>;
// Row-major 2x2 matrix.
using Mat2 = std::array<Complex, 4>;

Mat2 pauli_matrix(Pauli p);
// A unitary representative of c (global phase arbitrary but fixed).
const Mat2& clifford_matrix(const LocalClifford& c);

// Dense state on n <= 12 qubits. Qubit q is bit q of the basis index.
class StateVector {
 public:
  static constexpr std::size_t kMaxQubits = 12;

  explicit StateVector(std::size_t n);  // |0...0>
  StateVector(std::size_t n, std::vector<Complex> amplitudes);
  static StateVector plus_state(std::size_t n);

  std::size_t qubit_count() const { return n_; }
  const std::vector<Complex>& amplitudes() const { return amp_; }
  std::vector<Complex>& mutable_amplitudes() { return amp_; }
  Complex operator[](std::size_t i) const { return amp_[i]; }

  void apply(std::size_t q, const Mat2& m);
  void apply(std::size_t q, const LocalClifford& c) { apply(q, clifford_matrix(c)); }
  void apply_cz(std::size_t a, std::size_t b);
  void apply_cnot(std::size_t c, std::size_t t);
  // Applies the operator p including its phase.
  void apply(const PauliString& p);

  double norm_squared() const;
  // Returns the norm before normalization.
  double normalize();
  Complex inner(const StateVector& other) const;  // <this|other>
  // <this|p|this>.
  Complex expectation(const PauliString& p) const;

  // Contracts qubit q with the bra <v| and drops it; qubits above q shift down.
  StateVector contract(std::size_t q, const std::array<Complex, 2>& v) const;
  // Same with a computational basis bra.
  StateVector contract(std::size_t q, int bit) const;

 private:
  void check_qubit(std::size_t q) const;

  std::size_t n_;
  std::vector<Complex> amp_;
};

// Normalized eigenvector of p with eigenvalue sign (+1 or -1).
std::array<Complex, 2> pauli_eigenvector(Pauli p, int sign);

// max_i |a_i - e^{i phi} b_i| after normalizing both and aligning the phase on
// the largest amplitude of a. Returns +inf on size mismatch.
double deviation_up_to_phase(const StateVector& a, const StateVector& b);

}  // namespace mbqr

#endif  // MBQR_STATE_VECTOR_H_
