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

#include "mbqr/circuit.h"

#include <set>
#include <sstream>

namespace mbqr {

namespace {

CircuitElement make_element(CircuitElement::Kind kind, std::size_t a, std::size_t b = 0) {
  CircuitElement e;
  e.kind = kind;
  e.a = a;
  e.b = b;
  return e;
}

}  // namespace

char side_char(Side s) { return s == Side::kA ? 'A' : 'B'; }

void CliffordCircuit::check_qubit(std::size_t q) const {
  if (q >= qubits_) {
    throw std::out_of_range("circuit qubit " + std::to_string(q) + " out of range (" +
                            std::to_string(qubits_) + " qubits)");
  }
}

std::vector<std::size_t> CliffordCircuit::projection_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].kind == CircuitElement::Kind::kProjZ) {
      out.push_back(i);
    }
  }
  return out;
}

CliffordCircuit& CliffordCircuit::input(Side side, std::size_t q) {
  check_qubit(q);
  inputs_.push_back({side, q});
  return *this;
}

CliffordCircuit& CliffordCircuit::output(Side side, std::size_t q) {
  check_qubit(q);
  outputs_.push_back({side, q});
  return *this;
}

CliffordCircuit& CliffordCircuit::single(const LocalClifford& c, std::size_t q) {
  check_qubit(q);
  CircuitElement e;
  e.kind = CircuitElement::Kind::kSingle;
  e.a = q;
  e.gate = c;
  elements_.push_back(e);
  return *this;
}

CliffordCircuit& CliffordCircuit::single(std::string_view name, std::size_t q) {
  return single(LocalClifford::from_name(name), q);
}

CliffordCircuit& CliffordCircuit::cz(std::size_t a, std::size_t b) {
  check_qubit(a);
  check_qubit(b);
  if (a == b) {
    throw std::invalid_argument("CZ needs two distinct qubits");
  }
  elements_.push_back(make_element(CircuitElement::Kind::kCZ, a, b));
  return *this;
}

CliffordCircuit& CliffordCircuit::cnot(std::size_t c, std::size_t t) {
  check_qubit(c);
  check_qubit(t);
  if (c == t) {
    throw std::invalid_argument("CNOT needs two distinct qubits");
  }
  elements_.push_back(make_element(CircuitElement::Kind::kCNOT, c, t));
  return *this;
}

CliffordCircuit& CliffordCircuit::zz(std::size_t a, std::size_t b, int sign) {
  check_qubit(a);
  check_qubit(b);
  if (a == b || (sign != 1 && sign != -1)) {
    throw std::invalid_argument("ZZ needs two distinct qubits and sign +1 or -1");
  }
  CircuitElement e = make_element(CircuitElement::Kind::kZZ, a, b);
  e.value = sign;
  elements_.push_back(e);
  return *this;
}

CliffordCircuit& CliffordCircuit::project_z(std::size_t q, int value, ProjectionRole role,
                                            std::string label) {
  check_qubit(q);
  if (value != 0 && value != 1) {
    throw std::invalid_argument("projection value must be 0 or 1");
  }
  CircuitElement e = make_element(CircuitElement::Kind::kProjZ, q);
  e.value = value;
  e.role = role;
  if (role == ProjectionRole::kCheck && label.empty()) {
    label = "m" + std::to_string(projection_indices().size());
  }
  e.label = std::move(label);
  elements_.push_back(e);
  return *this;
}

void CliffordCircuit::validate() const {
  std::vector<bool> dead(qubits_);
  auto live = [&](std::size_t q) {
    if (dead[q]) {
      throw std::invalid_argument("element acts on projected qubit " + std::to_string(q));
    }
  };
  for (const auto& e : elements_) {
    live(e.a);
    if (e.kind == CircuitElement::Kind::kCZ || e.kind == CircuitElement::Kind::kCNOT ||
        e.kind == CircuitElement::Kind::kZZ) {
      live(e.b);
    }
    if (e.kind == CircuitElement::Kind::kProjZ) {
      dead[e.a] = true;
    }
  }
  std::set<std::size_t> seen_in, seen_out;
  for (const auto& p : inputs_) {
    if (!seen_in.insert(p.qubit).second) {
      throw std::invalid_argument("qubit " + std::to_string(p.qubit) + " listed twice as input");
    }
  }
  for (const auto& p : outputs_) {
    if (!seen_out.insert(p.qubit).second) {
      throw std::invalid_argument("qubit " + std::to_string(p.qubit) + " listed twice as output");
    }
    if (dead[p.qubit]) {
      throw std::invalid_argument("output qubit " + std::to_string(p.qubit) + " is projected");
    }
  }
  for (std::size_t q = 0; q < qubits_; ++q) {
    if (!dead[q] && !seen_out.count(q)) {
      throw std::invalid_argument("qubit " + std::to_string(q) +
                                  " is neither projected nor an output");
    }
  }
}

std::string CliffordCircuit::to_text() const {
  std::ostringstream out;
  out << "QUBITS " << qubits_ << '\n';
  for (const auto& p : inputs_) {
    out << "IN " << side_char(p.side) << ' ' << p.qubit << '\n';
  }
  for (const auto& e : elements_) {
    switch (e.kind) {
      case CircuitElement::Kind::kSingle:
        out << e.gate.name() << ' ' << e.a << '\n';
        break;
      case CircuitElement::Kind::kCZ:
        out << "CZ " << e.a << ' ' << e.b << '\n';
        break;
      case CircuitElement::Kind::kCNOT:
        out << "CNOT " << e.a << ' ' << e.b << '\n';
        break;
      case CircuitElement::Kind::kZZ:
        out << "ZZ " << e.a << ' ' << e.b << ' ' << (e.value > 0 ? '+' : '-') << '\n';
        break;
      case CircuitElement::Kind::kProjZ:
        out << "PROJZ " << e.a << ' ' << e.value;
        if (e.role == ProjectionRole::kCheck) {
          out << " CHECK " << e.label;
        } else {
          out << " FRAME " << (e.role == ProjectionRole::kFrameX ? 'X' : 'Z');
        }
        out << '\n';
        break;
    }
  }
  for (const auto& p : outputs_) {
    out << "OUT " << side_char(p.side) << ' ' << p.qubit << '\n';
  }
  return out.str();
}

CliffordCircuit CliffordCircuit::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  CliffordCircuit c;
  bool have_qubits = false;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + msg);
  };
  auto read_index = [&](std::istringstream& row) {
    long long v;
    if (!(row >> v) || v < 0) {
      fail("expected qubit index");
    }
    return static_cast<std::size_t>(v);
  };
  auto read_side = [&](std::istringstream& row) {
    std::string s;
    row >> s;
    if (s == "A") return Side::kA;
    if (s == "B") return Side::kB;
    fail("expected side A or B");
    return Side::kA;
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      line.resize(hash);
    }
    std::istringstream row(line);
    std::string op;
    if (!(row >> op)) {
      continue;
    }
    if (op == "QUBITS") {
      if (have_qubits) fail("QUBITS given twice");
      c.qubits_ = read_index(row);
      have_qubits = true;
      continue;
    }
    if (!have_qubits) {
      fail("QUBITS must come first");
    }
    try {
      if (op == "IN") {
        Side s = read_side(row);
        c.input(s, read_index(row));
      } else if (op == "OUT") {
        Side s = read_side(row);
        c.output(s, read_index(row));
      } else if (op == "CZ" || op == "CNOT") {
        std::size_t a = read_index(row);
        std::size_t b = read_index(row);
        op == "CZ" ? c.cz(a, b) : c.cnot(a, b);
      } else if (op == "ZZ") {
        std::size_t a = read_index(row);
        std::size_t b = read_index(row);
        std::string sign;
        row >> sign;
        if (sign != "+" && sign != "-") fail("ZZ sign must be + or -");
        c.zz(a, b, sign == "+" ? 1 : -1);
      } else if (op == "PROJZ") {
        std::size_t q = read_index(row);
        long long v;
        if (!(row >> v)) fail("PROJZ needs a value");
        std::string kind, tag;
        ProjectionRole role = ProjectionRole::kCheck;
        std::string label;
        if (row >> kind) {
          if (!(row >> tag)) fail("PROJZ " + kind + " needs an argument");
          if (kind == "CHECK") {
            label = tag;
          } else if (kind == "FRAME" && (tag == "X" || tag == "Z")) {
            role = tag == "X" ? ProjectionRole::kFrameX : ProjectionRole::kFrameZ;
          } else {
            fail("PROJZ role must be CHECK <id> or FRAME X|Z");
          }
        }
        c.project_z(q, static_cast<int>(v), role, label);
      } else {
        LocalClifford g;
        try {
          g = LocalClifford::from_name(op);
        } catch (const std::invalid_argument&) {
          throw UnsupportedGateError("line " + std::to_string(line_no) + ": unsupported gate '" +
                                     op + "'");
        }
        c.single(g, read_index(row));
      }
    } catch (const UnsupportedGateError&) {
      throw;
    } catch (const std::invalid_argument& e) {
      std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      fail(msg);
    } catch (const std::out_of_range& e) {
      fail(e.what());
    }
    std::string extra;
    if (row >> extra) {
      fail("unexpected token '" + extra + "'");
    }
  }
  if (!have_qubits) {
    throw std::invalid_argument("circuit text has no QUBITS line");
  }
  return c;
}

void apply_element(const CircuitElement& e, StabilizerState* st, std::size_t offset) {
  switch (e.kind) {
    case CircuitElement::Kind::kSingle:
      st->apply(e.a + offset, e.gate);
      return;
    case CircuitElement::Kind::kCZ:
      st->apply_cz(e.a + offset, e.b + offset);
      return;
    case CircuitElement::Kind::kCNOT:
      st->apply_cnot(e.a + offset, e.b + offset);
      return;
    case CircuitElement::Kind::kZZ:
      st->apply_zz_rotation(e.a + offset, e.b + offset, e.value);
      return;
    case CircuitElement::Kind::kProjZ:
      break;
  }
  throw UnsupportedGateError("Z projection is not a unitary Clifford element");
}

PauliString clifford_conjugate(const CliffordCircuit& c, const PauliString& p) {
  if (p.size() != c.qubit_count()) {
    throw std::invalid_argument("Pauli string size does not match circuit");
  }
  PauliString r = p;
  for (const auto& e : c.elements()) {
    switch (e.kind) {
      case CircuitElement::Kind::kSingle:
        conjugate_in_place(e.gate, e.a, &r);
        break;
      case CircuitElement::Kind::kCZ:
        conjugate_cz(e.a, e.b, &r);
        break;
      case CircuitElement::Kind::kCNOT:
        conjugate_cnot(e.a, e.b, &r);
        break;
      case CircuitElement::Kind::kZZ:
        conjugate_zz(e.a, e.b, e.value, &r);
        break;
      case CircuitElement::Kind::kProjZ:
        throw UnsupportedGateError("cannot conjugate through a Z projection");
    }
  }
  return r;
}

PauliString clifford_conjugate(const LocalClifford& c, const PauliString& p, std::size_t q) {
  PauliString r = p;
  conjugate_in_place(c, q, &r);
  return r;
}

}  // namespace mbqr
