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

#include "mbqr/graph.h"

#include <bit>
#include <sstream>
#include <stdexcept>

namespace mbqr {

Graph::Graph(std::size_t n) : adj_(n, 0) {
  if (n > kMaxVertices) {
    throw std::invalid_argument("graph has " + std::to_string(n) + " vertices, limit is " +
                                std::to_string(kMaxVertices));
  }
}

Graph::Graph(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : Graph(n) {
  for (const auto& [a, b] : edges) {
    add_edge(a, b);
  }
}

void Graph::check_vertex(std::size_t a) const {
  if (a >= adj_.size()) {
    throw std::out_of_range("vertex " + std::to_string(a) + " out of range for graph with " +
                            std::to_string(adj_.size()) + " vertices");
  }
}

void Graph::check_pair(std::size_t a, std::size_t b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) {
    throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
  }
}

bool Graph::has_edge(std::size_t a, std::size_t b) const {
  check_vertex(a);
  check_vertex(b);
  return (adj_[a] >> b) & 1;
}

void Graph::add_edge(std::size_t a, std::size_t b) {
  check_pair(a, b);
  adj_[a] |= std::uint64_t{1} << b;
  adj_[b] |= std::uint64_t{1} << a;
}

void Graph::remove_edge(std::size_t a, std::size_t b) {
  check_pair(a, b);
  adj_[a] &= ~(std::uint64_t{1} << b);
  adj_[b] &= ~(std::uint64_t{1} << a);
}

void Graph::toggle_edge(std::size_t a, std::size_t b) {
  check_pair(a, b);
  adj_[a] ^= std::uint64_t{1} << b;
  adj_[b] ^= std::uint64_t{1} << a;
}

std::uint64_t Graph::neighbor_mask(std::size_t a) const {
  check_vertex(a);
  return adj_[a];
}

std::vector<std::size_t> Graph::neighbors(std::size_t a) const {
  std::vector<std::size_t> out;
  for (std::uint64_t m = neighbor_mask(a); m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::size_t Graph::degree(std::size_t a) const {
  return static_cast<std::size_t>(std::popcount(neighbor_mask(a)));
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (std::size_t b = a + 1; b < adj_.size(); ++b) {
      if ((adj_[a] >> b) & 1) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t m : adj_) {
    total += static_cast<std::size_t>(std::popcount(m));
  }
  return total / 2;
}

bool Graph::is_connected() const {
  if (adj_.empty()) {
    return true;
  }
  std::uint64_t seen = 1, frontier = 1;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t m = frontier; m != 0; m &= m - 1) {
      next |= adj_[std::countr_zero(m)];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return std::popcount(seen) == static_cast<int>(adj_.size());
}

Graph Graph::without_vertex(std::size_t a) const {
  check_vertex(a);
  std::vector<std::size_t> order;
  for (std::size_t v = 0; v < adj_.size(); ++v) {
    if (v != a) {
      order.push_back(v);
    }
  }
  return permuted(order);
}

Graph Graph::permuted(const std::vector<std::size_t>& order) const {
  Graph g(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (has_edge(order[i], order[j])) {
        g.add_edge(i, j);
      }
    }
  }
  return g;
}

std::string Graph::to_text() const {
  std::ostringstream out;
  out << adj_.size() << '\n';
  for (const auto& [a, b] : edges()) {
    out << a << ' ' << b << '\n';
  }
  return out.str();
}

Graph Graph::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  auto next_line = [&](std::string* out) {
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.resize(hash);
      }
      if (line.find_first_not_of(" \t\r") != std::string::npos) {
        *out = line;
        return true;
      }
    }
    return false;
  };
  std::string content;
  if (!next_line(&content)) {
    throw std::invalid_argument("graph text is empty");
  }
  std::istringstream head(content);
  long long n = -1;
  if (!(head >> n) || n < 0) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": expected vertex count");
  }
  Graph g(static_cast<std::size_t>(n));
  while (next_line(&content)) {
    std::istringstream row(content);
    long long a, b;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra) || a < 0 || b < 0 || a >= n || b >= n || a == b) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad edge '" + content + "'");
    }
    if (g.has_edge(a, b)) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": duplicate edge");
    }
    g.add_edge(a, b);
  }
  return g;
}

Graph local_complement(const Graph& g, std::size_t a) {
  Graph out = g;
  auto nb = g.neighbors(a);
  for (std::size_t i = 0; i < nb.size(); ++i) {
    for (std::size_t j = i + 1; j < nb.size(); ++j) {
      out.toggle_edge(nb[i], nb[j]);
    }
  }
  return out;
}

}  // namespace mbqr
