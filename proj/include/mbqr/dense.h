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

#ifndef MBQR_DENSE_H_
#define MBQR_DENSE_H_

#include <array>

#include <Eigen/Dense>

#include "mbqr/bell_diagonal.h"
#include "mbqr/state_vector.h"

namespace mbqr {

// Dense density matrices for validation. Qubit q is bit q of the row index.
using DensityMatrix = Eigen::MatrixXcd;

DensityMatrix pure_density(const StateVector& s);
// `low` occupies the low qubits of the result.
DensityMatrix tensor(const DensityMatrix& low, const DensityMatrix& high);
std::size_t qubit_count(const DensityMatrix& rho);

void apply_unitary(DensityMatrix* rho, std::size_t q, const Mat2& u);
void apply_cnot(DensityMatrix* rho, std::size_t c, std::size_t t);
// exp(-i sign pi/4 Z_a Z_b).
void apply_zz(DensityMatrix* rho, std::size_t a, std::size_t b, int sign);
// D_q rho = p rho + (1 - p)/2 I_q (x) tr_q rho.
void apply_lwn(DensityMatrix* rho, std::size_t q, double p);
// Pauli channel with probabilities indexed by Bell label (I, Z, X, Y).
void apply_pauli_channel(DensityMatrix* rho, std::size_t q, const std::array<double, 4>& probs);
// Unnormalized <bit|_q rho |bit>_q with qubit q removed.
DensityMatrix project_out(const DensityMatrix& rho, std::size_t q, int bit);

// Two-qubit state with qubit 0 the first half.
DensityMatrix bell_density(const BellDiagonalState& s);
// (sigma_label (x) I)|phi+>, index = first + 2 second.
std::array<Complex, 4> bell_vector(int label);
// <Phi_j| rho |Phi_j> for each label (unnormalized if rho is).
std::array<double, 4> bell_weights(const DensityMatrix& rho2);
// Largest off-diagonal modulus of a two-qubit state in the Bell basis.
double bell_offdiagonal(const DensityMatrix& rho2);

}  // namespace mbqr

#endif  // MBQR_DENSE_H_
