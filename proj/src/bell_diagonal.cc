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

#include "mbqr/bell_diagonal.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace mbqr {

namespace {

void check_probability(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1], got " +
                                std::to_string(x));
  }
}

}  // namespace

BellDiagonalState BellDiagonalState::werner(double f) {
  check_probability(f, "fidelity");
  double r = (1.0 - f) / 3.0;
  return {{f, r, r, r}};
}

BellDiagonalState BellDiagonalState::binary(double f) {
  check_probability(f, "fidelity");
  return {{f, 1.0 - f, 0.0, 0.0}};
}

BellDiagonalState BellDiagonalState::from_weights(std::array<double, 4> w) {
  BellDiagonalState s{w};
  s.validate();
  return s;
}

void BellDiagonalState::validate() const {
  double sum = 0;
  for (double x : w) {
    if (!(x >= -1e-15)) {
      throw std::invalid_argument("Bell-diagonal weight is negative: " + str());
    }
    sum += x;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("Bell-diagonal weights do not sum to one: " + str());
  }
}

std::string BellDiagonalState::str() const {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "(%.12g, %.12g, %.12g, %.12g)", w[0], w[1], w[2], w[3]);
  return buf;
}

std::array<double, 4> lwn_channel(double p) {
  check_probability(p, "noise parameter p");
  double e = (1.0 - p) / 4.0;
  return {1.0 - 3.0 * e, e, e, e};
}

std::array<double, 4> convolve(const std::array<double, 4>& a, const std::array<double, 4>& b) {
  std::array<double, 4> out{};
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      out[i ^ j] += a[i] * b[j];
    }
  }
  return out;
}

BellDiagonalState apply_lwn(const BellDiagonalState& s, double p, int qubits) {
  if (qubits < 0 || qubits > 2) {
    throw std::invalid_argument("a pair has at most two qubits");
  }
  BellDiagonalState out = s;
  // A Pauli on either half shifts the label the same way.
  for (int i = 0; i < qubits; ++i) {
    out.w = convolve(out.w, lwn_channel(p));
  }
  return out;
}

BellDiagonalState swap_perfect(const BellDiagonalState& ab, const BellDiagonalState& bc) {
  return {convolve(ab.w, bc.w)};
}

}  // namespace mbqr
