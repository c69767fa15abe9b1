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

#include <cmath>
#include <random>

#include "doctest.h"
#include "mbqr/graph.h"
#include "mbqr/graph_state.h"
#include "mbqr/local_clifford.h"
#include "mbqr/pauli.h"
#include "mbqr/stabilizer_state.h"
#include "mbqr/state_vector.h"
#include "test_util.h"

using namespace mbqr;

namespace {

const Complex kI{0, 1};

Mat2 mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2],
          a[2] * b[1] + a[3] * b[3]};
}

Mat2 dag(const Mat2& a) { return {std::conj(a[0]), std::conj(a[2]), std::conj(a[1]), std::conj(a[3])}; }

// Equal up to a global phase.
bool same_up_to_phase(const Mat2& a, const Mat2& b) {
  int k = std::abs(a[0]) > 0.1 ? 0 : 1;
  if (std::abs(b[k]) < 1e-9) {
    return false;
  }
  Complex ph = a[k] / b[k];
  for (int i = 0; i < 4; ++i) {
    if (std::abs(a[i] - ph * b[i]) > 1e-9) {
      return false;
    }
  }
  return true;
}

// exp(-i sign pi/4 P) written out directly.
Mat2 root_matrix(Pauli p, int sign) {
  Mat2 m = pauli_matrix(p);
  double r = 1 / std::sqrt(2.0);
  // (sign i P)^(1/2) = (I + sign i P)/sqrt(2)
  return {r * (1.0 + double(sign) * kI * m[0]), r * double(sign) * kI * m[1],
          r * double(sign) * kI * m[2], r * (1.0 + double(sign) * kI * m[3])};
}

StateVector project_and_drop(const StateVector& s, std::size_t q, Pauli basis, int outcome) {
  return s.contract(q, pauli_eigenvector(basis, outcome));
}

}  // namespace

TEST_CASE("pauli multiplication") {
  auto x = PauliString::parse("X"), z = PauliString::parse("Z");
  CHECK((x * z).str() == "-iY");
  CHECK((z * x).str() == "+iY");
  auto ix = PauliString::parse("IX");
  auto r = ix * ix;
  CHECK(r.is_identity());
  CHECK(r.phase_power() == 0);
  CHECK((PauliString::parse("XZ") * PauliString::parse("ZX")).str() == "+YY");
  CHECK_THROWS_AS(PauliString::parse("X") * PauliString::parse("XX"), std::invalid_argument);

  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> letter(0, 3), phase(0, 3);
  auto rnd = [&] {
    std::vector<Pauli> ls(5);
    for (auto& l : ls) {
      l = static_cast<Pauli>(letter(rng));
    }
    return PauliString(ls, phase(rng));
  };
  for (int t = 0; t < 200; ++t) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK((a * b) * c == a * (b * c));
    // Phase group check against the matrix product on a state.
    StateVector s = StateVector::plus_state(5);
    s.apply(0, LocalClifford::from_name("C_XYZ"));
    StateVector s1 = s, s2 = s;
    s1.apply(b);
    s1.apply(a);
    s2.apply(a * b);
    CHECK(std::abs(s1.inner(s2) - 1.0) < 1e-12);
  }
}

TEST_CASE("local clifford table matches matrices") {
  const auto& names = LocalClifford::all_names();
  for (int i = 0; i < 24; ++i) {
    LocalClifford c = LocalClifford::from_name(names[i]);
    CHECK(c.index() == i);
    const Mat2& u = clifford_matrix(c);
    for (Pauli p : {Pauli::kX, Pauli::kY, Pauli::kZ}) {
      SignedPauli img = c.conjugate(p);
      Mat2 expect = pauli_matrix(img.letter);
      if (img.negative) {
        for (auto& v : expect) v = -v;
      }
      Mat2 got = mul(mul(u, pauli_matrix(p)), dag(u));
      for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(got[k] - expect[k]) < 1e-12);
      }
    }
  }
  CHECK(LocalClifford::from_name("H").conjugate(Pauli::kX) == SignedPauli{Pauli::kZ, false});
  CHECK_THROWS(LocalClifford::from_name("T"));
}

TEST_CASE("square roots of Paulis") {
  for (Pauli p : {Pauli::kX, Pauli::kY, Pauli::kZ}) {
    for (int sign : {-1, 1}) {
      CHECK(same_up_to_phase(clifford_matrix(LocalClifford::root(p, sign)), root_matrix(p, sign)));
    }
  }
  CHECK(LocalClifford::root(Pauli::kX, -1).name() == "SQRT_X");
  CHECK(LocalClifford::root(Pauli::kZ, -1).name() == "S");
}

TEST_CASE("local clifford composition and inverse") {
  for (const auto& a : LocalClifford::all()) {
    CHECK((a * a.inverse()).is_identity());
    for (const auto& b : LocalClifford::all()) {
      CHECK(same_up_to_phase(clifford_matrix(a * b), mul(clifford_matrix(a), clifford_matrix(b))));
    }
  }
}

TEST_CASE("clifford conjugation preserves commutation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> letter(0, 3), pick(0, 23);
  for (int t = 0; t < 300; ++t) {
    std::vector<Pauli> la(3), lb(3);
    for (int q = 0; q < 3; ++q) {
      la[q] = static_cast<Pauli>(letter(rng));
      lb[q] = static_cast<Pauli>(letter(rng));
    }
    PauliString a(la), b(lb);
    bool before = a.commutes_with(b);
    for (std::size_t q = 0; q < 3; ++q) {
      auto c = LocalClifford::all()[pick(rng)];
      conjugate_in_place(c, q, &a);
      conjugate_in_place(c, q, &b);
    }
    CHECK(a.commutes_with(b) == before);
  }
}

TEST_CASE("graph basics and text round trip") {
  Graph g(3, {{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK(Graph::from_text(g.to_text()) == g);
  CHECK_THROWS_AS(g.add_edge(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(g.has_edge(0, 3), std::out_of_range);
  CHECK_THROWS(Graph::from_text("3\n0 1\n0 1\n"));
  CHECK_THROWS(Graph::from_text("2\n0 5\n"));
}

TEST_CASE("local complementation") {
  Graph tri(3, {{0, 1}, {0, 2}, {1, 2}});
  CHECK(local_complement(tri, 0) == Graph(3, {{0, 1}, {0, 2}}));
  Graph path(3, {{0, 1}, {1, 2}});
  CHECK(local_complement(path, 1) == tri);
  CHECK_THROWS_AS(local_complement(path, 3), std::out_of_range);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Graph g = testing::random_graph(7, 0.5, rng);
    Graph h = g;
    for (int k = 0; k < 10; ++k) {
      h = local_complement(h, rng() % 7);
      for (std::size_t v = 0; v < 7; ++v) {
        CHECK_FALSE(h.has_edge(v, v));
      }
    }
    std::size_t a = rng() % 7;
    CHECK(local_complement(local_complement(g, a), a) == g);
  }
}

TEST_CASE("lc_correction examples") {
  auto u = lc_correction(Graph(2, {{0, 1}}), 0);
  CHECK(u[0] == LocalClifford::root(Pauli::kX, -1));
  CHECK(u[1] == LocalClifford::root(Pauli::kZ, +1));
  auto v = lc_correction(Graph(2), 1);
  CHECK(v[0].is_identity());
  CHECK(v[1].name() == "SQRT_X");
}

TEST_CASE("local complementation LU identity for all graphs up to 6 vertices") {
  double worst = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t code = 0; code < count; ++code) {
      Graph g = testing::graph_from_code(n, code);
      StateVector base = to_statevector(g);
      for (std::size_t a = 0; a < n; ++a) {
        StateVector s = base;
        auto u = lc_correction(g, a);
        for (std::size_t v = 0; v < n; ++v) {
          s.apply(v, u[v]);
        }
        worst = std::max(worst, deviation_up_to_phase(to_statevector(local_complement(g, a)), s));
      }
    }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("graph state is stabilized by its generators") {
  std::mt19937_64 rng(5);
  double worst = 0;
  auto check = [&](const Graph& g) {
    GraphState gs(g);
    StateVector s = to_statevector(gs);
    for (const auto& k : gs.stabilizer_generators()) {
      StateVector t = s;
      t.apply(k);
      for (std::size_t i = 0; i < s.amplitudes().size(); ++i) {
        worst = std::max(worst, std::abs(t[i] - s[i]));
      }
    }
  };
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * (n - 1) / 2)); ++code) {
      check(testing::graph_from_code(n, code));
    }
  }
  for (int t = 0; t < 300; ++t) {
    check(testing::random_graph(6 + t % 3, 0.5, rng));
  }
  CHECK(worst < 1e-12);
  // Also with random corrections.
  for (int t = 0; t < 100; ++t) {
    GraphState gs = testing::random_graph_state(5, rng);
    StateVector s = to_statevector(gs);
    for (const auto& k : gs.stabilizer_generators()) {
      CHECK(std::abs(s.expectation(k) - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("to_statevector examples") {
  StateVector one = to_statevector(GraphState(Graph(1)));
  CHECK(std::abs(one[0] - 1 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(one[1] - 1 / std::sqrt(2.0)) < 1e-15);
  StateVector edge = to_statevector(GraphState(Graph(2, {{0, 1}})));
  CHECK(std::abs(edge[3] + 0.5) < 1e-15);
  CHECK(std::abs(edge[1] - 0.5) < 1e-15);
  StateVector tri = to_statevector(GraphState(Graph(3, {{0, 1}, {0, 2}, {1, 2}})));
  for (std::size_t i = 0; i < 8; ++i) {
    int edges_hit = ((i & 3) == 3) + ((i & 5) == 5) + ((i & 6) == 6);
    CHECK(std::abs(tri[i] - (edges_hit % 2 ? -1.0 : 1.0) / std::sqrt(8.0)) < 1e-15);
  }
  CHECK_THROWS(to_statevector(GraphState(Graph(13))));
}

TEST_CASE("measurement rule examples") {
  GraphState path(Graph(3, {{0, 1}, {1, 2}}));
  auto z = measure_pauli(path, 1, Pauli::kZ, +1);
  CHECK(z.probability == Probability::kHalf);
  CHECK(z.state->graph == Graph(2));
  CHECK(z.state->corrections[0].is_identity());
  CHECK(z.state->corrections[1].is_identity());

  auto y = measure_pauli(path, 1, Pauli::kY, +1);
  CHECK(y.state->graph == Graph(2, {{0, 1}}));
  CHECK(y.state->corrections[0] == LocalClifford::root(Pauli::kZ, -1));
  CHECK(y.state->corrections[1] == LocalClifford::root(Pauli::kZ, -1));
  CHECK(deviation_up_to_phase(to_statevector(*y.state),
                              project_and_drop(to_statevector(path), 1, Pauli::kY, +1)) < 1e-12);

  GraphState edge(Graph(2, {{0, 1}}));
  auto x = measure_pauli(edge, 0, Pauli::kX, +1);
  CHECK(x.state->size() == 1);
  CHECK(deviation_up_to_phase(to_statevector(*x.state),
                              project_and_drop(to_statevector(edge), 0, Pauli::kX, +1)) < 1e-12);

  // Isolated vertex: X is deterministic.
  GraphState lone(Graph(2));
  CHECK(measure_pauli(lone, 0, Pauli::kX, +1).probability == Probability::kOne);
  CHECK(measure_pauli(lone, 0, Pauli::kX, -1).probability == Probability::kZero);
  CHECK_FALSE(measure_pauli(lone, 0, Pauli::kX, -1).state.has_value());
  CHECK_THROWS_AS(measure_pauli(lone, 2, Pauli::kX, 1), std::out_of_range);
  CHECK_THROWS_AS(measure_pauli(lone, 0, Pauli::kI, 1), std::invalid_argument);
}

TEST_CASE("measurement rules agree with direct projection") {
  std::mt19937_64 rng(2026);
  std::uniform_int_distribution<int> basis_pick(0, 2);
  double worst = 0;
  int cases = 0;
  for (int t = 0; t < 600; ++t) {
    std::size_t n = 2 + t % 7;
    GraphState gs = t % 2 ? testing::random_graph_state(n, rng)
                          : GraphState(testing::random_graph(n, 0.5, rng));
    std::size_t a = rng() % n;
    Pauli basis = std::array{Pauli::kX, Pauli::kY, Pauli::kZ}[basis_pick(rng)];
    int outcome = rng() % 2 ? 1 : -1;
    StateVector full = to_statevector(gs);
    StateVector direct = project_and_drop(full, a, basis, outcome);
    double p = direct.norm_squared();
    auto r = measure_pauli(gs, a, basis, outcome);
    CHECK(std::abs(p - to_double(r.probability)) < 1e-12);
    if (r.state) {
      worst = std::max(worst, deviation_up_to_phase(direct, to_statevector(*r.state)));
      ++cases;
    }
  }
  CHECK(cases > 500);
  CHECK(worst < 1e-10);
}

TEST_CASE("z decoupling") {
  GraphState star(Graph(4, {{0, 1}, {0, 2}, {0, 3}}));
  GraphState leaf = z_decouple(star, 3);
  CHECK(leaf.graph == Graph(3, {{0, 1}, {0, 2}}));
  GraphState centre = z_decouple(GraphState(Graph(3, {{0, 1}, {0, 2}})), 0, -1);
  CHECK(centre.graph == Graph(2));
  CHECK(centre.corrections[0].name() == "Z");
  CHECK(centre.corrections[1].name() == "Z");
  GraphState lone = z_decouple(GraphState(Graph(3, {{0, 1}})), 2);
  CHECK(lone.graph == Graph(2, {{0, 1}}));
}

TEST_CASE("sampled measurement") {
  std::mt19937_64 rng(1);
  GraphState gs(Graph(3, {{0, 1}, {1, 2}}));
  int plus = 0;
  for (int t = 0; t < 2000; ++t) {
    plus += measure_pauli_sampled(gs, 0, Pauli::kX, rng).outcome > 0;
  }
  CHECK(plus > 850);
  CHECK(plus < 1150);
}

TEST_CASE("graph state text round trip") {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 20; ++t) {
    GraphState gs = testing::random_graph_state(5, rng);
    CHECK(GraphState::from_text(gs.to_text()) == gs);
  }
  CHECK_THROWS(GraphState::from_text("2\n0 1\nLC 0 T\n"));
}

TEST_CASE("stabilizer state operations match the state vector") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 50; ++t) {
    GraphState gs = testing::random_graph_state(5, rng);
    StabilizerState st(gs.stabilizer_generators());
    StateVector sv = to_statevector(gs);
    CHECK(deviation_up_to_phase(st.to_statevector(), sv) < 1e-10);
    st.apply_cnot(0, 3);
    sv.apply_cnot(0, 3);
    st.apply_cz(1, 4);
    sv.apply_cz(1, 4);
    st.apply(2, LocalClifford::from_name("C_XYZ"));
    sv.apply(2, LocalClifford::from_name("C_XYZ"));
    CHECK(deviation_up_to_phase(st.to_statevector(), sv) < 1e-10);
    StateVector projected = sv.contract(2, 1);
    double p = st.postselect_z(2, 1);
    CHECK(std::abs(p - projected.norm_squared()) < 1e-12);
    if (p > 0) {
      st.remove_qubit(2);
      CHECK(deviation_up_to_phase(st.to_statevector(), projected) < 1e-10);
    }
  }
}

TEST_CASE("zz rotation matches exponential") {
  for (int sign : {1, -1}) {
    StabilizerState st(GraphState(Graph(2, {{0, 1}})).stabilizer_generators());
    st.apply(0, LocalClifford::from_name("C_XYZ"));
    StateVector sv = st.to_statevector();
    st.apply_zz_rotation(0, 1, sign);
    // exp(-i s pi/4 ZZ) is diagonal: phase e^{-i s pi/4} on even parity.
    auto& a = sv.mutable_amplitudes();
    for (std::size_t i = 0; i < 4; ++i) {
      int parity = ((i & 1) ^ ((i >> 1) & 1)) ? -1 : 1;
      a[i] *= std::exp(Complex(0, -sign * parity * M_PI / 4));
    }
    CHECK(deviation_up_to_phase(st.to_statevector(), sv) < 1e-10);
  }
}

TEST_CASE("stabilizer state validation") {
  CHECK_THROWS(StabilizerState({PauliString::parse("XX"), PauliString::parse("ZI")}));
  CHECK_THROWS(StabilizerState({PauliString::parse("XX"), PauliString::parse("XX")}));
  StabilizerState bell({PauliString::parse("XX"), PauliString::parse("ZZ")});
  CHECK(bell.contains(PauliString::parse("-YY")));
  CHECK_FALSE(bell.contains(PauliString::parse("YY")));
  CHECK_FALSE(bell.group_phase(PauliString::parse("XI")).has_value());
}
