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

#include "mbqr/local_clifford.h"

#include <stdexcept>

namespace mbqr {

namespace {

constexpr SignedPauli P(Pauli p) { return {p, false}; }
constexpr SignedPauli N(Pauli p) { return {p, true}; }

constexpr Pauli kX = Pauli::kX;
constexpr Pauli kY = Pauli::kY;
constexpr Pauli kZ = Pauli::kZ;

struct Entry {
  const char* name;
  SignedPauli x;
  SignedPauli z;
};

// Names follow the usual stabilizer-simulator conventions.
constexpr Entry kTable[24] = {
    {"I", P(kX), P(kZ)},          {"X", P(kX), N(kZ)},
    {"Y", N(kX), N(kZ)},          {"Z", N(kX), P(kZ)},
    {"SQRT_X", P(kX), N(kY)},     {"SQRT_X_DAG", P(kX), P(kY)},
    {"H_YZ", N(kX), P(kY)},       {"H_NYZ", N(kX), N(kY)},
    {"S", P(kY), P(kZ)},          {"S_DAG", N(kY), P(kZ)},
    {"H_XY", P(kY), N(kZ)},       {"H_NXY", N(kY), N(kZ)},
    {"C_XYZ", P(kY), P(kX)},      {"C_NXYZ", N(kY), N(kX)},
    {"C_XNYZ", N(kY), P(kX)},     {"C_XYNZ", P(kY), N(kX)},
    {"H", P(kZ), P(kX)},          {"SQRT_Y", N(kZ), P(kX)},
    {"SQRT_Y_DAG", P(kZ), N(kX)}, {"H_NXZ", N(kZ), N(kX)},
    {"C_ZYX", P(kZ), P(kY)},      {"C_NZYX", N(kZ), N(kY)},
    {"C_ZNYX", P(kZ), N(kY)},     {"C_ZYNX", N(kZ), P(kY)},
};

}  // namespace

LocalClifford::LocalClifford(SignedPauli x_image, SignedPauli z_image)
    : x_(x_image), z_(z_image) {
  if (x_.letter == Pauli::kI || z_.letter == Pauli::kI || x_.letter == z_.letter) {
    throw std::invalid_argument("images of X and Z must be anticommuting Paulis");
  }
}

LocalClifford LocalClifford::pauli(Pauli p) {
  return LocalClifford({Pauli::kX, z_bit(p)}, {Pauli::kZ, x_bit(p)});
}

const std::array<LocalClifford, 24>& LocalClifford::all() {
  static const std::array<LocalClifford, 24> table = [] {
    std::array<LocalClifford, 24> t;
    for (int i = 0; i < 24; ++i) {
      t[i] = LocalClifford(kTable[i].x, kTable[i].z);
    }
    return t;
  }();
  return table;
}

const std::array<const char*, 24>& LocalClifford::all_names() {
  static const std::array<const char*, 24> names = [] {
    std::array<const char*, 24> t;
    for (int i = 0; i < 24; ++i) {
      t[i] = kTable[i].name;
    }
    return t;
  }();
  return names;
}

LocalClifford LocalClifford::from_name(std::string_view name) {
  for (int i = 0; i < 24; ++i) {
    if (name == kTable[i].name) {
      return all()[i];
    }
  }
  throw std::invalid_argument("unknown single-qubit Clifford name: " + std::string(name));
}

LocalClifford LocalClifford::root(Pauli axis, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("root sign must be +1 or -1");
  }
  bool minus = sign < 0;
  switch (axis) {
    case Pauli::kX:
      return from_name(minus ? "SQRT_X" : "SQRT_X_DAG");
    case Pauli::kY:
      return from_name(minus ? "SQRT_Y" : "SQRT_Y_DAG");
    case Pauli::kZ:
      return from_name(minus ? "S" : "S_DAG");
    case Pauli::kI:
      break;
  }
  throw std::invalid_argument("root axis must be X, Y or Z");
}

SignedPauli LocalClifford::conjugate(Pauli p) const {
  switch (p) {
    case Pauli::kI:
      return {Pauli::kI, false};
    case Pauli::kX:
      return x_;
    case Pauli::kZ:
      return z_;
    case Pauli::kY: {
      // Y = i X Z, so C Y C^dag = i C(X) C(Z).
      int k;
      Pauli letter = multiply_letters(x_.letter, z_.letter, &k);
      k += 1 + (x_.negative ? 2 : 0) + (z_.negative ? 2 : 0);
      return {letter, (k % 4) == 2};
    }
  }
  return {Pauli::kI, false};
}

int LocalClifford::index() const {
  for (int i = 0; i < 24; ++i) {
    if (kTable[i].x == x_ && kTable[i].z == z_) {
      return i;
    }
  }
  return -1;
}

std::string LocalClifford::name() const { return kTable[index()].name; }

bool LocalClifford::is_pauli() const {
  return x_.letter == Pauli::kX && z_.letter == Pauli::kZ;
}

LocalClifford LocalClifford::inverse() const {
  for (const auto& c : all()) {
    if ((c * *this).is_identity()) {
      return c;
    }
  }
  throw std::logic_error("no inverse found");
}

LocalClifford operator*(const LocalClifford& a, const LocalClifford& b) {
  auto apply = [&](SignedPauli s) {
    SignedPauli r = a.conjugate(s.letter);
    r.negative ^= s.negative;
    return r;
  };
  return LocalClifford(apply(b.x_image()), apply(b.z_image()));
}

void conjugate_in_place(const LocalClifford& c, std::size_t q, PauliString* p) {
  SignedPauli r = c.conjugate((*p)[q]);
  p->set(q, r.letter);
  if (r.negative) {
    p->set_phase_power(p->phase_power() + 2);
  }
}

}  // namespace mbqr
