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

#ifndef MBQR_PAULI_H_
#define MBQR_PAULI_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace mbqr {

// Single-qubit Pauli letter. Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : std::uint8_t { kI = 0, kX = 1, kZ = 2, kY = 3 };

inline bool x_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 1) != 0; }
inline bool z_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 2) != 0; }
inline Pauli pauli_from_bits(bool x, bool z) {
  return static_cast<Pauli>((x ? 1 : 0) | (z ? 2 : 0));
}
char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

// Product a*b of two single-qubit Paulis. Returns the letter and sets
// *i_power to the exponent (mod 4) of the phase i^k.
Pauli multiply_letters(Pauli a, Pauli b, int* i_power);

inline bool anticommute(Pauli a, Pauli b) {
  return ((x_bit(a) && z_bit(b)) != (z_bit(a) && x_bit(b)));
}

// Index of a Pauli in the sigma_k numbering used for Bell outcomes:
// 0=I, 1=X, 2=Y, 3=Z.
int sigma_index(Pauli p);
Pauli sigma_pauli(int k);

class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : letters_(n, Pauli::kI) {}
  PauliString(std::vector<Pauli> letters, int i_power = 0);

  // Accepts an optional phase prefix (+, -, i, +i, -i) followed by one of
  // I X Y Z _ per qubit, e.g. "-iXZ_Y".
  static PauliString parse(std::string_view text);
  static PauliString single(std::size_t n, std::size_t q, Pauli p);

  std::size_t size() const { return letters_.size(); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  void set(std::size_t q, Pauli p) { letters_[q] = p; }
  const std::vector<Pauli>& letters() const { return letters_; }

  // Phase as i^phase_power(), in {0,1,2,3}.
  int phase_power() const { return i_power_; }
  void set_phase_power(int k) { i_power_ = ((k % 4) + 4) % 4; }
  bool is_hermitian() const { return (i_power_ & 1) == 0; }
  bool negative() const { return i_power_ == 2; }
  bool is_identity() const;
  std::size_t weight() const;

  // Multiplies in place: *this = *this * rhs.
  PauliString& operator*=(const PauliString& rhs);
  bool commutes_with(const PauliString& other) const;

  std::string str() const;
  bool operator==(const PauliString& other) const = default;

 private:
  std::vector<Pauli> letters_;
  int i_power_ = 0;
};

PauliString pauli_multiply(const PauliString& p, const PauliString& q);
inline PauliString operator*(const PauliString& p, const PauliString& q) {
  return pauli_multiply(p, q);
}

}  // namespace mbqr

#endif  // MBQR_PAULI_H_
