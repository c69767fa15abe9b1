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

#include "mbqr/graph_state.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace mbqr {

namespace {

void check_vertex(const GraphState& gs, std::size_t a) {
  if (a >= gs.size()) {
    throw std::out_of_range("vertex " + std::to_string(a) + " out of range for " +
                            std::to_string(gs.size()) + "-vertex graph state");
  }
}

std::vector<std::size_t> mask_vertices(std::uint64_t m) {
  std::vector<std::size_t> out;
  for (; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

}  // namespace

GraphState::GraphState(Graph g) : graph(std::move(g)), corrections(graph.vertex_count()) {}

GraphState::GraphState(Graph g, std::vector<LocalClifford> c)
    : graph(std::move(g)), corrections(std::move(c)) {
  if (corrections.size() != graph.vertex_count()) {
    throw std::invalid_argument("one correction per vertex required");
  }
}

std::vector<PauliString> GraphState::stabilizer_generators() const {
  std::size_t n = size();
  std::vector<PauliString> out;
  for (std::size_t a = 0; a < n; ++a) {
    PauliString k(n);
    k.set(a, Pauli::kX);
    for (std::size_t b : graph.neighbors(a)) {
      k.set(b, Pauli::kZ);
    }
    for (std::size_t q = 0; q < n; ++q) {
      conjugate_in_place(corrections[q], q, &k);
    }
    out.push_back(std::move(k));
  }
  return out;
}

std::string GraphState::to_text() const {
  std::string out = graph.to_text();
  for (std::size_t v = 0; v < corrections.size(); ++v) {
    if (!corrections[v].is_identity()) {
      out += "LC " + std::to_string(v) + " " + corrections[v].name() + "\n";
    }
  }
  return out;
}

GraphState GraphState::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line, graph_text;
  std::vector<std::pair<std::size_t, std::string>> lcs;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream row(line);
    std::string tag;
    if ((row >> tag) && tag == "LC") {
      long long v;
      std::string name;
      if (!(row >> v >> name) || v < 0) {
        throw std::invalid_argument("line " + std::to_string(line_no) + ": bad LC line");
      }
      lcs.emplace_back(static_cast<std::size_t>(v), name);
      graph_text += "\n";
    } else {
      graph_text += line + "\n";
    }
  }
  GraphState gs(Graph::from_text(graph_text));
  for (const auto& [v, name] : lcs) {
    check_vertex(gs, v);
    gs.corrections[v] = LocalClifford::from_name(name);
  }
  return gs;
}

double to_double(Probability p) {
  switch (p) {
    case Probability::kZero:
      return 0.0;
    case Probability::kHalf:
      return 0.5;
    case Probability::kOne:
      return 1.0;
  }
  return 0.0;
}

std::vector<LocalClifford> lc_correction(const Graph& g, std::size_t a) {
  std::vector<LocalClifford> u(g.vertex_count());
  u.at(a) = LocalClifford::root(Pauli::kX, -1);
  for (std::size_t b : g.neighbors(a)) {
    u[b] = LocalClifford::root(Pauli::kZ, +1);
  }
  return u;
}

GraphState local_complement(const GraphState& gs, std::size_t a) {
  check_vertex(gs, a);
  GraphState out = gs;
  out.graph = local_complement(gs.graph, a);
  auto u = lc_correction(gs.graph, a);
  // C |G> = C U^dag |tau_a G>.
  for (std::size_t v = 0; v < gs.size(); ++v) {
    out.corrections[v] = gs.corrections[v] * u[v].inverse();
  }
  return out;
}

MeasurementResult measure_pauli(const GraphState& gs, std::size_t a, Pauli basis, int outcome) {
  check_vertex(gs, a);
  if (basis == Pauli::kI) {
    throw std::invalid_argument("measurement basis must be X, Y or Z");
  }
  if (outcome != 1 && outcome != -1) {
    throw std::invalid_argument("measurement outcome must be +1 or -1");
  }
  // Pull the observable back through the correction on a.
  SignedPauli pulled = gs.corrections[a].inverse().conjugate(basis);
  bool plus = (outcome > 0) != pulled.negative;

  const Graph& g = gs.graph;
  const std::size_t n = g.vertex_count();
  const std::uint64_t na = g.neighbor_mask(a);
  std::vector<LocalClifford> u(n);
  Graph h = g;
  Probability prob = Probability::kHalf;

  auto isolate = [](Graph* graph, std::size_t v) {
    for (std::size_t b : graph->neighbors(v)) {
      graph->remove_edge(v, b);
    }
  };

  switch (pulled.letter) {
    case Pauli::kZ:
      isolate(&h, a);
      if (!plus) {
        for (std::size_t b : mask_vertices(na)) {
          u[b] = LocalClifford::pauli(Pauli::kZ);
        }
      }
      break;
    case Pauli::kY:
      h = local_complement(h, a);
      isolate(&h, a);
      for (std::size_t b : mask_vertices(na)) {
        u[b] = LocalClifford::root(Pauli::kZ, plus ? -1 : +1);
      }
      break;
    case Pauli::kX: {
      if (na == 0) {
        // |+> on a decouples; the outcome is deterministic.
        prob = plus ? Probability::kOne : Probability::kZero;
        break;
      }
      std::size_t b0 = static_cast<std::size_t>(std::countr_zero(na));
      const std::uint64_t nb0 = g.neighbor_mask(b0);
      const std::uint64_t abit = std::uint64_t{1} << a, b0bit = std::uint64_t{1} << b0;
      h = local_complement(h, b0);
      h = local_complement(h, a);
      isolate(&h, a);
      h = local_complement(h, b0);
      if (plus) {
        u[b0] = LocalClifford::root(Pauli::kY, +1);
        for (std::size_t b : mask_vertices(na & ~nb0 & ~b0bit)) {
          u[b] = LocalClifford::pauli(Pauli::kZ);
        }
      } else {
        u[b0] = LocalClifford::root(Pauli::kY, -1);
        for (std::size_t b : mask_vertices(nb0 & ~na & ~abit)) {
          u[b] = LocalClifford::pauli(Pauli::kZ);
        }
      }
      break;
    }
    case Pauli::kI:
      break;
  }

  MeasurementResult result{prob, std::nullopt};
  if (prob == Probability::kZero) {
    return result;
  }
  GraphState out(h.without_vertex(a));
  for (std::size_t v = 0, j = 0; v < n; ++v) {
    if (v != a) {
      out.corrections[j++] = gs.corrections[v] * u[v];
    }
  }
  result.state = std::move(out);
  return result;
}

SampledMeasurement measure_pauli_sampled(const GraphState& gs, std::size_t a, Pauli basis,
                                         std::mt19937_64& rng) {
  auto plus = measure_pauli(gs, a, basis, +1);
  if (plus.probability == Probability::kOne) {
    return {+1, *plus.state};
  }
  if (plus.probability == Probability::kZero) {
    return {-1, *measure_pauli(gs, a, basis, -1).state};
  }
  if (std::bernoulli_distribution(0.5)(rng)) {
    return {+1, *plus.state};
  }
  return {-1, *measure_pauli(gs, a, basis, -1).state};
}

GraphState z_decouple(const GraphState& gs, std::size_t a, int outcome) {
  // The physical Z on a may map to a different Pauli on the bare graph
  // vertex; measure_pauli handles that through the correction on a.
  auto r = measure_pauli(gs, a, Pauli::kZ, outcome);
  if (!r.state) {
    r = measure_pauli(gs, a, Pauli::kZ, -outcome);
  }
  return *r.state;
}

StateVector to_statevector(const Graph& g) {
  StateVector s = StateVector::plus_state(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    s.apply_cz(a, b);
  }
  return s;
}

StateVector to_statevector(const GraphState& gs) {
  StateVector s = to_statevector(gs.graph);
  for (std::size_t v = 0; v < gs.size(); ++v) {
    if (!gs.corrections[v].is_identity()) {
      s.apply(v, gs.corrections[v]);
    }
  }
  return s;
}

}  // namespace mbqr
