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

#ifndef MBQR_GRAPH_H_
#define MBQR_GRAPH_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace mbqr {

// Simple undirected graph on at most 64 vertices, stored as adjacency masks.
class Graph {
 public:
  static constexpr std::size_t kMaxVertices = 64;

  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

  std::size_t vertex_count() const { return adj_.size(); }
  bool has_edge(std::size_t a, std::size_t b) const;
  void add_edge(std::size_t a, std::size_t b);
  void remove_edge(std::size_t a, std::size_t b);
  void toggle_edge(std::size_t a, std::size_t b);

  std::uint64_t neighbor_mask(std::size_t a) const;
  std::vector<std::size_t> neighbors(std::size_t a) const;
  std::size_t degree(std::size_t a) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;
  bool is_connected() const;

  // Returns the graph with vertex a deleted; vertices above a shift down.
  Graph without_vertex(std::size_t a) const;
  // Relabels vertices: new vertex i is old vertex order[i].
  Graph permuted(const std::vector<std::size_t>& order) const;

  // Edge-list text: first line n, then one "a b" line per edge.
  std::string to_text() const;
  static Graph from_text(const std::string& text);

  bool operator==(const Graph&) const = default;

 private:
  void check_vertex(std::size_t a) const;
  void check_pair(std::size_t a, std::size_t b) const;

  std::vector<std::uint64_t> adj_;
};

// tau_a: complements the edges inside the neighborhood of a.
Graph local_complement(const Graph& g, std::size_t a);

}  // namespace mbqr

#endif  // MBQR_GRAPH_H_
