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

#include "mbqr/resource.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <sstream>

#include "mbqr/state_vector.h"

namespace mbqr {

StabilizerState jamiolkowski_state(const CliffordCircuit& c) {
  c.validate();
  const std::size_t n_in = c.inputs().size();
  const std::size_t q = c.qubit_count();
  StabilizerState st(n_in + q);
  for (std::size_t i = 0; i < n_in; ++i) {
    st.apply_h(i);
    st.apply_cnot(i, n_in + c.inputs()[i].qubit);
  }
  std::vector<bool> projected(q);
  for (const auto& e : c.elements()) {
    if (e.kind == CircuitElement::Kind::kProjZ) {
      if (st.postselect_z(n_in + e.a, e.value) == 0.0) {
        throw std::invalid_argument("reference branch of projection on qubit " +
                                    std::to_string(e.a) + " has probability zero");
      }
      projected[e.a] = true;
    } else {
      apply_element(e, &st, n_in);
    }
  }
  // Reorder to [references, outputs, projected] and drop the projected tail.
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < n_in; ++i) {
    order.push_back(i);
  }
  for (const auto& p : c.outputs()) {
    order.push_back(n_in + p.qubit);
  }
  for (std::size_t k = 0; k < q; ++k) {
    if (projected[k]) {
      order.push_back(n_in + k);
    }
  }
  st.permute(order);
  for (std::size_t k = st.qubit_count(); k > n_in + c.outputs().size(); --k) {
    st.remove_qubit(k - 1);
  }
  return st;
}

GraphState stabilizer_to_graph(const StabilizerState& st) {
  const std::size_t n = st.qubit_count();
  std::vector<PauliString> rows = st.generators();
  std::vector<LocalClifford> ops(n);
  auto apply_local = [&](std::size_t q, const LocalClifford& c) {
    for (auto& row : rows) {
      conjugate_in_place(c, q, &row);
    }
    ops[q] = c * ops[q];
  };
  auto eliminate = [&](std::size_t col, std::size_t from, std::vector<bool>* pivots) {
    std::size_t piv = from;
    while (piv < n && !x_bit(rows[piv][col])) {
      ++piv;
    }
    if (piv == n) {
      return false;
    }
    std::swap(rows[piv], rows[from]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != from && x_bit(rows[r][col])) {
        rows[r] *= rows[from];
      }
    }
    if (pivots) {
      (*pivots)[col] = true;
    }
    return true;
  };

  std::vector<bool> pivot(n);
  for (std::size_t col = 0, rank = 0; col < n; ++col) {
    if (eliminate(col, rank, &pivot)) {
      ++rank;
    }
  }
  // Z-only rows have full rank on the non-pivot columns, so a Hadamard there
  // makes the X block invertible.
  for (std::size_t q = 0; q < n; ++q) {
    if (!pivot[q]) {
      apply_local(q, LocalClifford::from_name("H"));
    }
  }
  for (std::size_t col = 0; col < n; ++col) {
    if (!eliminate(col, col, nullptr)) {
      throw std::invalid_argument("tableau does not describe a pure state");
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (rows[q][q] == Pauli::kY) {
      apply_local(q, LocalClifford::from_name("S_DAG"));
    }
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (rows[q].negative()) {
      apply_local(q, LocalClifford::pauli(Pauli::kZ));
    }
  }
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i][i] != Pauli::kX || !rows[i].is_hermitian() || rows[i].negative()) {
      throw std::logic_error("graph canonicalization failed on row " + rows[i].str());
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Pauli p = rows[i][j];
      if (p != Pauli::kI && p != Pauli::kZ) {
        throw std::logic_error("graph canonicalization failed on row " + rows[i].str());
      }
      if ((p == Pauli::kZ) != (rows[j][i] == Pauli::kZ)) {
        throw std::logic_error("adjacency is not symmetric");
      }
      if (p == Pauli::kZ && i < j) {
        g.add_edge(i, j);
      }
    }
  }
  std::vector<LocalClifford> corrections(n);
  for (std::size_t q = 0; q < n; ++q) {
    corrections[q] = ops[q].inverse();
  }
  return GraphState(std::move(g), std::move(corrections));
}

std::string VertexRole::str() const {
  return std::string(kind == Kind::kInput ? "IN " : "OUT ") + side_char(side) + " " +
         std::to_string(index);
}

std::string ResourceState::to_text() const {
  std::ostringstream out;
  out << "RESOURCE " << (name.empty() ? "unnamed" : name) << '\n';
  out << "VERTICES " << graph_state.size() << '\n';
  for (const auto& [a, b] : graph_state.graph.edges()) {
    out << "EDGE " << a << ' ' << b << '\n';
  }
  for (std::size_t v = 0; v < graph_state.size(); ++v) {
    out << "LC " << v << ' ' << graph_state.corrections[v].name() << '\n';
  }
  for (std::size_t v = 0; v < roles.size(); ++v) {
    out << "ROLE " << v << ' ' << roles[v].str() << '\n';
  }
  return out.str();
}

ResourceState ResourceState::from_text(const std::string& text, CliffordCircuit source) {
  ResourceState r = compile_resource(source);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  bool have_vertices = false;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("resource line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream row(line);
    std::string op;
    if (!(row >> op)) continue;
    if (op == "RESOURCE") {
      row >> r.name;
    } else if (op == "VERTICES") {
      long long n;
      if (!(row >> n) || n < 0) fail("bad vertex count");
      if (static_cast<std::size_t>(n) != r.roles.size()) {
        fail("vertex count " + std::to_string(n) + " does not match circuit ports (" +
             std::to_string(r.roles.size()) + ")");
      }
      r.graph_state = GraphState(Graph(static_cast<std::size_t>(n)));
      have_vertices = true;
    } else if (!have_vertices) {
      fail("VERTICES must precede " + op);
    } else if (op == "EDGE") {
      long long a, b;
      if (!(row >> a >> b)) fail("bad edge");
      try {
        r.graph_state.graph.add_edge(a, b);
      } catch (const std::exception& e) {
        fail(e.what());
      }
    } else if (op == "LC") {
      long long v;
      std::string name;
      if (!(row >> v >> name) || v < 0 || static_cast<std::size_t>(v) >= r.roles.size()) {
        fail("bad LC line");
      }
      try {
        r.graph_state.corrections[v] = LocalClifford::from_name(name);
      } catch (const std::exception& e) {
        fail(e.what());
      }
    } else if (op == "ROLE") {
      long long v, idx;
      std::string kind, side;
      if (!(row >> v >> kind >> side >> idx) || v < 0 ||
          static_cast<std::size_t>(v) >= r.roles.size()) {
        fail("bad ROLE line");
      }
      if (r.roles[v].str() != kind + " " + side + " " + std::to_string(idx)) {
        fail("role of vertex " + std::to_string(v) + " does not match circuit");
      }
    } else {
      fail("unknown record '" + op + "'");
    }
  }
  if (!have_vertices) {
    throw std::invalid_argument("resource text has no VERTICES line");
  }
  return r;
}

ResourceState compile_resource(const CliffordCircuit& c, std::string name) {
  ResourceState r;
  r.name = std::move(name);
  r.source = c;
  r.graph_state = stabilizer_to_graph(jamiolkowski_state(c));
  for (std::size_t i = 0; i < c.inputs().size(); ++i) {
    r.roles.push_back({VertexRole::Kind::kInput, c.inputs()[i].side, i, c.inputs()[i].qubit});
  }
  for (std::size_t j = 0; j < c.outputs().size(); ++j) {
    r.roles.push_back({VertexRole::Kind::kOutput, c.outputs()[j].side, j, c.outputs()[j].qubit});
  }
  return r;
}

ByproductRecord propagate_byproduct(const CliffordCircuit& c, const PauliString& before) {
  if (before.size() != c.qubit_count()) {
    throw std::invalid_argument("byproduct size does not match circuit");
  }
  ByproductRecord rec;
  PauliString r = before;
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
      case CircuitElement::Kind::kProjZ: {
        // <v| X = <v xor 1|; a Z factor is absorbed into the projection.
        bool flip = x_bit(r[e.a]);
        rec.flips.push_back(flip);
        rec.effective_projections.push_back(e.value ^ (flip ? 1 : 0));
        r.set(e.a, Pauli::kI);
        break;
      }
    }
  }
  rec.output_correction = PauliString(c.outputs().size());
  for (std::size_t j = 0; j < c.outputs().size(); ++j) {
    rec.output_correction.set(j, r[c.outputs()[j].qubit]);
  }
  return rec;
}

ByproductRecord bell_readin(const ResourceState& r, const std::vector<int>& outcomes) {
  if (outcomes.size() != r.input_count()) {
    throw std::invalid_argument("expected " + std::to_string(r.input_count()) +
                                " Bell outcomes, got " + std::to_string(outcomes.size()));
  }
  PauliString before(r.source.qubit_count());
  for (std::size_t i = 0; i < outcomes.size(); ++i) {
    before.set(r.source.inputs()[i].qubit, sigma_pauli(outcomes[i]));
  }
  return propagate_byproduct(r.source, before);
}

namespace {

// Runs the circuit on a state vector with the given projection values and
// returns the (unnormalized) output state in output order.
StateVector simulate_circuit(const CliffordCircuit& c, const StateVector& in,
                             const std::vector<int>& projections) {
  const std::size_t q = c.qubit_count();
  StateVector s(q);
  auto& amp = s.mutable_amplitudes();
  amp[0] = 0;
  for (std::size_t i = 0; i < in.amplitudes().size(); ++i) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < c.inputs().size(); ++k) {
      if ((i >> k) & 1) idx |= std::size_t{1} << c.inputs()[k].qubit;
    }
    amp[idx] = in[i];
  }
  std::vector<int> fixed(q, -1);
  std::size_t proj = 0;
  for (const auto& e : c.elements()) {
    switch (e.kind) {
      case CircuitElement::Kind::kSingle:
        s.apply(e.a, e.gate);
        break;
      case CircuitElement::Kind::kCZ:
        s.apply_cz(e.a, e.b);
        break;
      case CircuitElement::Kind::kCNOT:
        s.apply_cnot(e.a, e.b);
        break;
      case CircuitElement::Kind::kZZ: {
        const Complex even = std::exp(Complex(0, -e.value * M_PI / 4));
        const Complex odd = std::conj(even);
        for (std::size_t i = 0; i < amp.size(); ++i) {
          bool parity = ((i >> e.a) & 1) != ((i >> e.b) & 1);
          amp[i] *= parity ? odd : even;
        }
        break;
      }
      case CircuitElement::Kind::kProjZ: {
        int v = projections[proj++];
        for (std::size_t i = 0; i < amp.size(); ++i) {
          if (static_cast<int>((i >> e.a) & 1) != v) amp[i] = 0;
        }
        fixed[e.a] = v;
        break;
      }
    }
  }
  const std::size_t m = c.outputs().size();
  StateVector out(m);
  auto& oa = out.mutable_amplitudes();
  std::size_t base = 0;
  for (std::size_t k = 0; k < q; ++k) {
    if (fixed[k] == 1) base |= std::size_t{1} << k;
  }
  for (std::size_t o = 0; o < oa.size(); ++o) {
    std::size_t idx = base;
    for (std::size_t j = 0; j < m; ++j) {
      if ((o >> j) & 1) idx |= std::size_t{1} << c.outputs()[j].qubit;
    }
    oa[o] = amp[idx];
  }
  return out;
}

}  // namespace

VerifyReport verify_resource(const ResourceState& r, const CliffordCircuit& c, int random_inputs,
                             std::uint64_t seed) {
  VerifyReport report;
  const std::size_t n_in = c.inputs().size(), m = c.outputs().size();
  if (n_in + m > StateVector::kMaxQubits || c.qubit_count() > StateVector::kMaxQubits) {
    throw std::invalid_argument("verify_resource is limited to 12 qubits");
  }
  if (r.graph_state.size() != n_in + m) {
    report.detail = "vertex count " + std::to_string(r.graph_state.size()) + " != inputs + outputs";
    report.max_deviation = INFINITY;
    return report;
  }
  const StateVector res = to_statevector(r.graph_state);
  const std::size_t in_dim = std::size_t{1} << n_in;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  double ratio = -1;
  double worst = 0;
  std::size_t patterns = std::size_t{1} << (2 * n_in);
  for (int t = 0; t < random_inputs; ++t) {
    std::vector<Complex> a(in_dim);
    for (auto& v : a) v = Complex(gauss(rng), gauss(rng));
    StateVector psi(n_in, std::move(a));
    psi.normalize();
    std::map<std::vector<int>, StateVector> cache;
    for (std::size_t pat = 0; pat < patterns; ++pat) {
      std::vector<int> k(n_in);
      StateVector shifted = psi;
      for (std::size_t i = 0; i < n_in; ++i) {
        k[i] = static_cast<int>((pat >> (2 * i)) & 3);
        if (k[i]) shifted.apply(i, pauli_matrix(sigma_pauli(k[i])));
      }
      StateVector out(m);
      auto& oa = out.mutable_amplitudes();
      for (std::size_t o = 0; o < oa.size(); ++o) {
        Complex sum = 0;
        for (std::size_t x = 0; x < in_dim; ++x) {
          sum += res[x | (o << n_in)] * shifted[x];
        }
        oa[o] = sum;
      }
      ByproductRecord rec = bell_readin(r, k);
      auto it = cache.find(rec.effective_projections);
      if (it == cache.end()) {
        it = cache.emplace(rec.effective_projections,
                           simulate_circuit(c, psi, rec.effective_projections)).first;
      }
      StateVector expect = it->second;
      if (!rec.output_correction.is_identity()) expect.apply(rec.output_correction);
      double ne = expect.norm_squared(), no = out.norm_squared();
      double dev;
      if (ne < 1e-20) {
        dev = std::sqrt(no);
      } else {
        dev = no < 1e-20 ? 1.0 : deviation_up_to_phase(out, expect);
        double rt = no / ne;
        if (ratio < 0) ratio = rt;
        dev = std::max(dev, std::abs(rt - ratio) / ratio);
      }
      worst = std::max(worst, dev);
      ++report.patterns_checked;
    }
  }
  report.max_deviation = worst;
  report.ok = worst <= 1e-10;
  if (!report.ok) {
    report.detail = "max deviation " + std::to_string(worst);
  }
  return report;
}

}  // namespace mbqr
