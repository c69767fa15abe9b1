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

#ifndef MBQR_TESTS_UNIT_TEST_UTIL_H_
#define MBQR_TESTS_UNIT_TEST_UTIL_H_

#include <random>

#include "mbqr/graph.h"
#include "mbqr/graph_state.h"

namespace mbqr::testing {

inline Graph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  Graph g(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (coin(rng)) {
        g.add_edge(a, b);
      }
    }
  }
  return g;
}

// Graph number `code` on n vertices: bit k toggles the k-th pair in
// lexicographic order.
inline Graph graph_from_code(std::size_t n, std::uint64_t code) {
  Graph g(n);
  std::size_t k = 0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b, ++k) {
      if ((code >> k) & 1) {
        g.add_edge(a, b);
      }
    }
  }
  return g;
}

inline GraphState random_graph_state(std::size_t n, std::mt19937_64& rng) {
  GraphState gs(random_graph(n, 0.5, rng));
  std::uniform_int_distribution<int> pick(0, 23);
  for (auto& c : gs.corrections) {
    c = LocalClifford::all()[pick(rng)];
  }
  return gs;
}

}  // namespace mbqr::testing

#endif  // MBQR_TESTS_UNIT_TEST_UTIL_H_
