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

#include "mbqr/pauli.h"

#include <stdexcept>

namespace mbqr {

char pauli_char(Pauli p) {
  static constexpr char kChars[] = {'I', 'X', 'Z', 'Y'};
  return kChars[static_cast<int>(p)];
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I':
    case '_':
      return Pauli::kI;
    case 'X':
      return Pauli::kX;
    case 'Y':
      return Pauli::kY;
    case 'Z':
      return Pauli::kZ;
  }
  throw std::invalid_argument(std::string("not a Pauli letter: '") + c + "'");
}

Pauli multiply_letters(Pauli a, Pauli b, int* i_power) {
  // XY = iZ, YZ = iX, ZX = iY and the reverse orders pick up -i.
  int k = 0;
  if (a != Pauli::kI && b != Pauli::kI && a != b) {
    auto cyc = [](Pauli p) {
      return p == Pauli::kX ? 0 : p == Pauli::kY ? 1 : 2;
    };
    k = ((cyc(b) - cyc(a) + 3) % 3 == 1) ? 1 : 3;
  }
  *i_power = k;
  return static_cast<Pauli>(static_cast<std::uint8_t>(a) ^ static_cast<std::uint8_t>(b));
}

int sigma_index(Pauli p) {
  switch (p) {
    case Pauli::kI:
      return 0;
    case Pauli::kX:
      return 1;
    case Pauli::kY:
      return 2;
    case Pauli::kZ:
      return 3;
  }
  return 0;
}

Pauli sigma_pauli(int k) {
  static constexpr Pauli kTable[] = {Pauli::kI, Pauli::kX, Pauli::kY, Pauli::kZ};
  if (k < 0 || k > 3) {
    throw std::invalid_argument("Bell outcome index must be in 0..3, got " + std::to_string(k));
  }
  return kTable[k];
}

PauliString::PauliString(std::vector<Pauli> letters, int i_power)
    : letters_(std::move(letters)) {
  set_phase_power(i_power);
}

PauliString PauliString::parse(std::string_view text) {
  int k = 0;
  std::size_t pos = 0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    k = text[pos] == '-' ? 2 : 0;
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    k += 1;
    ++pos;
  }
  std::vector<Pauli> letters;
  for (; pos < text.size(); ++pos) {
    letters.push_back(pauli_from_char(text[pos]));
  }
  return PauliString(std::move(letters), k);
}

PauliString PauliString::single(std::size_t n, std::size_t q, Pauli p) {
  if (q >= n) {
    throw std::out_of_range("qubit index out of range");
  }
  PauliString s(n);
  s.letters_[q] = p;
  return s;
}

bool PauliString::is_identity() const {
  for (Pauli p : letters_) {
    if (p != Pauli::kI) {
      return false;
    }
  }
  return true;
}

std::size_t PauliString::weight() const {
  std::size_t w = 0;
  for (Pauli p : letters_) {
    w += p != Pauli::kI;
  }
  return w;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.size() != size()) {
    throw std::invalid_argument("Pauli string length mismatch: " + std::to_string(size()) +
                                " vs " + std::to_string(rhs.size()));
  }
  int k = i_power_ + rhs.i_power_;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    int d;
    letters_[q] = multiply_letters(letters_[q], rhs.letters_[q], &d);
    k += d;
  }
  set_phase_power(k);
  return *this;
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (other.size() != size()) {
    throw std::invalid_argument("Pauli string length mismatch");
  }
  bool anti = false;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    anti ^= anticommute(letters_[q], other.letters_[q]);
  }
  return !anti;
}

std::string PauliString::str() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[i_power_];
  for (Pauli p : letters_) {
    out += pauli_char(p);
  }
  return out;
}

PauliString pauli_multiply(const PauliString& p, const PauliString& q) {
  PauliString r = p;
  r *= q;
  return r;
}

}  // namespace mbqr
