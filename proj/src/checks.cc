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

#include "mbqr/checks.h"

#include <algorithm>
#include <cmath>

#include "mbqr/graph.h"
#include "mbqr/graph_state.h"
#include "mbqr/purification.h"
#include "mbqr/repeater.h"
#include "mbqr/stabilizer_state.h"
#include "mbqr/state_vector.h"

namespace mbqr {

void SuiteResult::fail(const std::string& what) {
  ++failures;
  if (failed.size() < 10) failed.push_back(what);
}

namespace {

constexpr double kTol = 1e-10;

Graph graph_from_code(std::size_t n, std::uint64_t code) {
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++k) {
      if ((code >> k) & 1) g.add_edge(a, b);
    }
  }
  return g;
}

double gap(const PurificationResult& a, const PurificationResult& b) {
  double d = std::abs(a.success_probability - b.success_probability);
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(a.output.w[k] - b.output.w[k]));
  return d;
}

}  // namespace

CliffordCircuit random_two_qubit_circuit(std::mt19937_64& rng) {
  CliffordCircuit c(2);
  c.input(Side::kA, 0).input(Side::kA, 1);
  std::uniform_int_distribution<int> kind(0, 3), pick(0, 23);
  int len = 3 + static_cast<int>(rng() % 8);
  for (int i = 0; i < len; ++i) {
    std::size_t q = rng() % 2;
    switch (kind(rng)) {
      case 0:
      case 1:
        c.single(LocalClifford::all()[pick(rng)], q);
        break;
      case 2:
        c.cnot(q, 1 - q);
        break;
      case 3:
        c.cz(0, 1);
        break;
    }
  }
  c.output(Side::kA, 0).output(Side::kB, 1);
  return c;
}

SuiteResult check_measurement_rules(std::size_t cases, std::size_t max_vertices,
                                    std::uint64_t seed) {
  SuiteResult r("graph measurement rules");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution edge(0.5);
  std::uniform_int_distribution<int> pick(0, 23), basis_pick(0, 2);
  const std::size_t span = std::max<std::size_t>(max_vertices, 2) - 1;
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t n = 2 + t % span;
    Graph g(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (edge(rng)) g.add_edge(a, b);
      }
    }
    GraphState gs(g);
    if (t % 2) {
      for (auto& c : gs.corrections) c = LocalClifford::all()[pick(rng)];
    }
    const std::size_t a = rng() % n;
    const Pauli basis = std::array{Pauli::kX, Pauli::kY, Pauli::kZ}[basis_pick(rng)];
    const int outcome = rng() % 2 ? 1 : -1;
    StateVector direct = to_statevector(gs).contract(a, pauli_eigenvector(basis, outcome));
    auto m = measure_pauli(gs, a, basis, outcome);
    ++r.cases;
    double dev = std::abs(direct.norm_squared() - to_double(m.probability));
    if (m.state) dev = std::max(dev, deviation_up_to_phase(direct, to_statevector(*m.state)));
    r.max_deviation = std::max(r.max_deviation, dev);
    if (!(dev < kTol)) {
      r.fail("n=" + std::to_string(n) + " vertex " + std::to_string(a) + " basis " +
             pauli_char(basis) + (outcome > 0 ? "+" : "-"));
    }
  }
  return r;
}

SuiteResult check_lc_identity(std::size_t max_vertices) {
  SuiteResult r("local complementation identity");
  for (std::size_t n = 1; n <= max_vertices; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < count; ++code) {
      Graph g = graph_from_code(n, code);
      StateVector base = to_statevector(g);
      for (std::size_t a = 0; a < n; ++a) {
        StateVector s = base;
        auto u = lc_correction(g, a);
        for (std::size_t v = 0; v < n; ++v) s.apply(v, u[v]);
        double dev = deviation_up_to_phase(to_statevector(local_complement(g, a)), s);
        ++r.cases;
        r.max_deviation = std::max(r.max_deviation, dev);
        if (!(dev < kTol)) {
          r.fail("n=" + std::to_string(n) + " graph " + std::to_string(code) + " vertex " +
                 std::to_string(a));
        }
      }
    }
  }
  return r;
}

SuiteResult check_ghz_equivalence(OxfordVariant v) {
  SuiteResult r("one-step resource is GHZ up to local Cliffords");
  ResourceState res = named_resource("G3+", v);
  ++r.cases;
  if (res.graph_state.size() != 3) {
    r.fail("G3+ has " + std::to_string(res.graph_state.size()) + " vertices");
    return r;
  }
  StabilizerState target(res.graph_state.stabilizer_generators());
  const auto& all = LocalClifford::all();
  for (int a = 0; a < 24; ++a) {
    for (int b = 0; b < 24; ++b) {
      for (int c = 0; c < 24; ++c) {
        StabilizerState ghz(
            {PauliString::parse("XXX"), PauliString::parse("ZZI"), PauliString::parse("IZZ")});
        ghz.apply(0, all[a]);
        ghz.apply(1, all[b]);
        ghz.apply(2, all[c]);
        if (ghz.same_state(target)) return r;
      }
    }
  }
  r.fail("no local Clifford maps GHZ onto G3+");
  return r;
}

SuiteResult check_resources(const std::vector<ResourceState>& resources, int random_inputs) {
  SuiteResult r("resource verification");
  for (const auto& res : resources) {
    ++r.cases;
    VerifyReport rep;
    try {
      rep = verify_resource(res, res.source, random_inputs);
    } catch (const std::exception& e) {
      rep.detail = e.what();
    }
    r.max_deviation = std::max(r.max_deviation, rep.max_deviation);
    if (!rep.ok) r.fail(res.name + ": " + rep.detail);
  }
  return r;
}

SuiteResult check_random_circuits(std::size_t count, std::uint64_t seed) {
  SuiteResult r("random two-qubit circuits");
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < count; ++t) {
    CliffordCircuit c = random_two_qubit_circuit(rng);
    ResourceState res = compile_resource(c, "random" + std::to_string(t));
    VerifyReport rep = verify_resource(res, c);
    ++r.cases;
    r.max_deviation = std::max(r.max_deviation, rep.max_deviation);
    if (!rep.ok) r.fail(res.name + ": " + rep.detail);
  }
  return r;
}

namespace {

// One Oxford step on byproducts (control c, target t): the surviving
// byproduct and whether the target projection flips.
Pauli table_row(Pauli c, Pauli t, int* flip) {
  PauliString out(1);
  *flip = 0;
  auto use = [&](Pauli letter) {
    out *= PauliString({letter});
    *flip ^= 1;
  };
  if (x_bit(t)) use(Pauli::kI);
  if (z_bit(t)) use(Pauli::kZ);
  if (x_bit(c)) use(Pauli::kX);
  if (z_bit(c)) use(Pauli::kY);
  return out[0];
}

}  // namespace

SuiteResult check_readin_table() {
  SuiteResult r("Bell read-in logical table");
  for (Side side : {Side::kA, Side::kB}) {
    ResourceState two = compile_resource(purification_circuit(side, 2, OxfordVariant::kXRotation));
    for (int pat = 0; pat < 256; ++pat) {
      std::vector<int> outcomes(4);
      std::vector<Pauli> in(4);
      for (int i = 0; i < 4; ++i) {
        outcomes[i] = (pat >> (2 * i)) & 3;
        in[i] = sigma_pauli(outcomes[i]);
      }
      int p1a, p1b, p2;
      Pauli o1a = table_row(in[0], in[1], &p1a);
      Pauli o1b = table_row(in[2], in[3], &p1b);
      Pauli o2 = table_row(o1a, o1b, &p2);
      ByproductRecord rec = bell_readin(two, outcomes);
      ++r.cases;
      if (rec.effective_projections != std::vector<int>{p1a, p1b, p2} ||
          rec.output_correction[0] != o2) {
        r.fail(std::string("side ") + side_char(side) + " pattern " + std::to_string(pat));
      }
    }
  }
  // psi+ on the control pair and phi- on the target pair leave XZ.
  ResourceState one = named_resource("G3+");
  ByproductRecord ex = bell_readin(one, {1, 3});
  ++r.cases;
  if (ex.effective_projections != std::vector<int>{0} || ex.output_correction[0] != Pauli::kY) {
    r.fail("worked example");
  }
  return r;
}

SuiteResult check_oracle_equivalence() {
  SuiteResult r("fast path equals dense simulation");
  for (const Network& net : {purification_network(1), purification_network(2),
                             integrated_network(1)}) {
    auto table = build_error_effects(net);
    for (double p : {1.0, 0.99, 0.96, 0.93}) {
      for (double f : {0.6, 0.8, 0.95}) {
        std::vector<BellDiagonalState> in;
        for (std::size_t l = 0; l < net.links.size(); ++l) {
          double e = 1 - f;
          in.push_back(l % 3 == 0   ? BellDiagonalState::binary(f)
                       : l % 3 == 1 ? BellDiagonalState::werner(f)
                                    : BellDiagonalState::from_weights({f, 0.5 * e, 0.3 * e, 0.2 * e}));
        }
        double dev = gap(mb_purify_fast(table, p, in), mb_purify_exact(net, p, in));
        ++r.cases;
        r.max_deviation = std::max(r.max_deviation, dev);
        if (!(dev < kTol)) {
          r.fail(net.name + " p=" + std::to_string(p) + " F=" + std::to_string(f));
        }
      }
    }
  }
  return r;
}

SuiteResult check_noiseless_reduction() {
  SuiteResult r("noiseless rounds equal the gate-based map");
  Network one = purification_network(1);
  auto two = build_error_effects(purification_network(2));
  const std::vector<double> fs = {0.55, 0.65, 0.75, 0.85, 0.95};
  for (double f1 : fs) {
    for (double f2 : fs) {
      auto a = BellDiagonalState::werner(f1);
      auto b = BellDiagonalState::from_weights({f2, 0.6 * (1 - f2), 0.4 * (1 - f2), 0});
      double dev = gap(mb_purify_exact(one, 1.0, {a, b}), oxford_map(a, b));
      auto l = oxford_map(a, b), rr = oxford_map(b, a);
      PurificationResult nested = oxford_map(l.output, rr.output);
      nested.success_probability *= l.success_probability * rr.success_probability;
      dev = std::max(dev, gap(mb_purify_fast(two, 1.0, {a, b, b, a}), nested));
      ++r.cases;
      r.max_deviation = std::max(r.max_deviation, dev);
      if (!(dev < kTol)) r.fail("F=" + std::to_string(f1) + "," + std::to_string(f2));
    }
  }
  return r;
}

SuiteResult check_variant_accounting(std::uint64_t trials, std::uint64_t seed) {
  SuiteResult r("variant accounting");
  const std::vector<std::vector<double>> probs = {{0.9, 0.85, 0.8}, {0.6, 0.75, 0.5}, {0.3, 0.4, 0.35}};
  std::uint64_t s = seed;
  for (const auto& q : probs) {
    for (double pb : {1.0, 0.95}) {
      for (auto v : {Variant::kV1, Variant::kV2, Variant::kV3}) {
        auto est = variant_cost_mc(v, q, pb, trials, s++);
        double exact = variant_cost(v, q, pb);
        double z = std::abs(est.mean - exact) / est.standard_error;
        ++r.cases;
        r.max_deviation = std::max(r.max_deviation, z);
        if (!(z < 3)) {
          r.fail(std::string(variant_name(v)) + " q=" + std::to_string(q[0]) +
                 " p_bell=" + std::to_string(pb) + ": " + std::to_string(z) + " standard errors");
        }
      }
    }
  }
  for (int i = 1; i <= 10; ++i) {
    for (int j = 1; j <= 10; ++j) {
      std::vector<double> q = {0.1 * i, 0.1 * j, 0.1 * ((i + j) % 10 + 1)};
      ++r.cases;
      if (variant_cost(Variant::kV2, q, 1) < variant_cost(Variant::kV1, q, 1) * (1 - 1e-12)) {
        r.fail("V2 < V1 at q1=" + std::to_string(q[0]) + " q2=" + std::to_string(q[1]));
      }
    }
  }
  return r;
}

}  // namespace mbqr
