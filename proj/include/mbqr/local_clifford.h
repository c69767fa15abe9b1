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

#ifndef MBQR_LOCAL_CLIFFORD_H_
#define MBQR_LOCAL_CLIFFORD_H_

#include <array>
#include <string>
#include <string_view>

#include "mbqr/pauli.h"

namespace mbqr {

struct SignedPauli {
  Pauli letter = Pauli::kI;
  bool negative = false;
  bool operator==(const SignedPauli&) const = default;
};

// Single-qubit Clifford stored by its conjugation action on X and Z
// (C X C^dag and C Z C^dag). Global phase is not represented.
class LocalClifford {
 public:
  // Identity.
  LocalClifford() = default;
  // Throws std::invalid_argument if the images do not form a valid
  // single-qubit tableau (they must anticommute and be non-identity).
  LocalClifford(SignedPauli x_image, SignedPauli z_image);

  static LocalClifford identity() { return {}; }
  static LocalClifford pauli(Pauli p);
  // Looks up one of the 24 names (see all_names()). Throws on unknown names.
  static LocalClifford from_name(std::string_view name);
  // (sign * i * axis)^(1/2) with sign = +1 or -1, e.g. root(Pauli::kX, -1) is
  // (-iX)^(1/2), the sqrt(X) gate.
  static LocalClifford root(Pauli axis, int sign);
  // All 24 elements in naming-table order.
  static const std::array<LocalClifford, 24>& all();
  static const std::array<const char*, 24>& all_names();

  SignedPauli x_image() const { return x_; }
  SignedPauli z_image() const { return z_; }
  // C P C^dag for a Hermitian single-qubit Pauli P.
  SignedPauli conjugate(Pauli p) const;
  // Index into all().
  int index() const;
  std::string name() const;
  bool is_identity() const { return *this == LocalClifford(); }
  bool is_pauli() const;

  LocalClifford inverse() const;

  bool operator==(const LocalClifford&) const = default;

 private:
  SignedPauli x_{Pauli::kX, false};
  SignedPauli z_{Pauli::kZ, false};
};

// Operator product a*b: b acts first. Conjugation by a*b maps P to a(b(P)).
LocalClifford operator*(const LocalClifford& a, const LocalClifford& b);

// Conjugates qubit q of p by c in place, updating the phase.
void conjugate_in_place(const LocalClifford& c, std::size_t q, PauliString* p);

}  // namespace mbqr

#endif  // MBQR_LOCAL_CLIFFORD_H_
