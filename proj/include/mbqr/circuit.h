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

#ifndef MBQR_CIRCUIT_H_
#define MBQR_CIRCUIT_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "mbqr/local_clifford.h"
#include "mbqr/pauli.h"
#include "mbqr/stabilizer_state.h"

namespace mbqr {

class UnsupportedGateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Side { kA, kB };
char side_char(Side s);

// What a Z projection means to the surrounding protocol. Check projections
// must agree between the two parties for success (same id on both sides).
// Frame projections belong to a Bell measurement whose outcome becomes an X
// or Z on the long-range pair.
enum class ProjectionRole { kCheck, kFrameX, kFrameZ };

struct CircuitElement {
  enum class Kind { kSingle, kCZ, kCNOT, kZZ, kProjZ };
  Kind kind = Kind::kSingle;
  std::size_t a = 0;
  std::size_t b = 0;
  LocalClifford gate;      // kSingle
  int value = 0;           // kProjZ: projected bit; kZZ: rotation sign
  ProjectionRole role = ProjectionRole::kCheck;
  std::string label;       // kProjZ check id
};

struct Port {
  Side side;
  std::size_t qubit;
  bool operator==(const Port&) const = default;
};

class CliffordCircuit {
 public:
  CliffordCircuit() = default;
  explicit CliffordCircuit(std::size_t qubits) : qubits_(qubits) {}

  std::size_t qubit_count() const { return qubits_; }
  const std::vector<CircuitElement>& elements() const { return elements_; }
  const std::vector<Port>& inputs() const { return inputs_; }
  const std::vector<Port>& outputs() const { return outputs_; }
  // Indices into elements() of the projections, in order.
  std::vector<std::size_t> projection_indices() const;

  CliffordCircuit& input(Side side, std::size_t q);
  CliffordCircuit& output(Side side, std::size_t q);
  CliffordCircuit& single(const LocalClifford& c, std::size_t q);
  CliffordCircuit& single(std::string_view name, std::size_t q);
  CliffordCircuit& h(std::size_t q) { return single("H", q); }
  CliffordCircuit& s(std::size_t q) { return single("S", q); }
  CliffordCircuit& pauli(Pauli p, std::size_t q) { return single(LocalClifford::pauli(p), q); }
  CliffordCircuit& cz(std::size_t a, std::size_t b);
  CliffordCircuit& cnot(std::size_t c, std::size_t t);
  // exp(-i sign pi/4 Z_a Z_b).
  CliffordCircuit& zz(std::size_t a, std::size_t b, int sign);
  CliffordCircuit& project_z(std::size_t q, int value, ProjectionRole role = ProjectionRole::kCheck,
                             std::string label = "");

  // Checks the structural invariants: gates act on live qubits, outputs are
  // unprojected, every qubit is either projected or an output, ports are
  // unique. Throws std::invalid_argument.
  void validate() const;

  // Line format: QUBITS n, IN A q, OUT B q, <gate name> q, CZ a b, CNOT c t,
  // ZZ a b +|-, PROJZ q v [CHECK id | FRAME X | FRAME Z]. '#' starts a comment.
  std::string to_text() const;
  static CliffordCircuit from_text(const std::string& text);

 private:
  void check_qubit(std::size_t q) const;

  std::size_t qubits_ = 0;
  std::vector<CircuitElement> elements_;
  std::vector<Port> inputs_;
  std::vector<Port> outputs_;
};

// C p C^dag for a projection-free circuit.
PauliString clifford_conjugate(const CliffordCircuit& c, const PauliString& p);
PauliString clifford_conjugate(const LocalClifford& c, const PauliString& p, std::size_t q);

// Applies a unitary element to a tableau; throws UnsupportedGateError on
// projections.
void apply_element(const CircuitElement& e, StabilizerState* st, std::size_t offset = 0);

}  // namespace mbqr

#endif  // MBQR_CIRCUIT_H_
