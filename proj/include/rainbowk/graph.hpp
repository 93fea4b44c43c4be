// Copyright 2026 The rainbowk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAINBOWK_GRAPH_HPP_
#define RAINBOWK_GRAPH_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rainbowk {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

// Unordered pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr Edge MakeEdge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on vertices 0..n-1, n >= 2. Immutable once built.
// Edges are kept in lexicographic order; an edge's position in that order is
// its EdgeId, which colorings use as their index. Neighbor lists are sorted
// ascending and carry the id of the connecting edge alongside.
class Graph {
 public:
  Graph(std::size_t num_vertices, std::vector<Edge> edges)
      : num_vertices_(num_vertices), edges_(std::move(edges)) {
    if (num_vertices_ < 2) {
      throw std::invalid_argument("graph needs at least 2 vertices");
    }
    if (num_vertices_ > std::size_t{1} << 31) {
      throw std::invalid_argument("graph too large");
    }
    for (Edge& e : edges_) {
      if (e.u == e.v) {
        throw std::invalid_argument("self-loop at vertex " +
                                    std::to_string(e.u));
      }
      e = MakeEdge(e.u, e.v);
      if (e.v >= num_vertices_) {
        throw std::invalid_argument("edge endpoint " + std::to_string(e.v) +
                                    " out of range");
      }
    }
    if (!std::is_sorted(edges_.begin(), edges_.end())) {
      std::sort(edges_.begin(), edges_.end());
    }
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
      throw std::invalid_argument("duplicate edge");
    }
    BuildAdjacency();
  }

  static Graph Complete(std::size_t n) {
    std::vector<Edge> edges;
    edges.reserve(n * (n - 1) / 2);
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
    }
    return Graph(n, std::move(edges));
  }

  static Graph Path(std::size_t n) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
    return Graph(n, std::move(edges));
  }

  static Graph Cycle(std::size_t n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (Vertex a = 0; a + 1 < n; ++a) edges.push_back({a, a + 1});
    edges.push_back({0, static_cast<Vertex>(n - 1)});
    return Graph(n, std::move(edges));
  }

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId id) const { return edges_[id]; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  // Ids of the edges to neighbors(v), position for position.
  std::span<const EdgeId> incident_edges(Vertex v) const {
    return {incident_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }

  std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (a == b || a >= num_vertices_ || b >= num_vertices_) return std::nullopt;
    if (degree(a) > degree(b)) std::swap(a, b);
    const auto nbrs = neighbors(a);
    const auto it = std::lower_bound(nbrs.begin(), nbrs.end(), b);
    if (it == nbrs.end() || *it != b) return std::nullopt;
    return incident_edges(a)[static_cast<std::size_t>(it - nbrs.begin())];
  }
  bool has_edge(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  std::size_t num_pairs() const {
    return num_vertices_ * (num_vertices_ - 1) / 2;
  }
  bool is_complete() const { return num_edges() == num_pairs(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  void BuildAdjacency() {
    offsets_.assign(num_vertices_ + 1, 0);
    for (const Edge& e : edges_) {
      ++offsets_[e.u + 1];
      ++offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < num_vertices_; ++i) {
      offsets_[i + 1] += offsets_[i];
    }
    neighbors_.resize(2 * edges_.size());
    incident_.resize(2 * edges_.size());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    // Lexicographic edge order fills each list in ascending neighbor order:
    // for vertex x, edges (w, x) with w < x come first (ascending w), then
    // edges (x, w) with w > x (ascending w).
    for (EdgeId id = 0; id < edges_.size(); ++id) {
      const Edge& e = edges_[id];
      neighbors_[fill[e.u]] = e.v;
      incident_[fill[e.u]++] = id;
      neighbors_[fill[e.v]] = e.u;
      incident_[fill[e.v]++] = id;
    }
  }

  std::size_t num_vertices_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<EdgeId> incident_;
};

// Edge-list text format: a line "n m", then m lines "u v" with u < v in
// lexicographic order.
inline void WriteEdgeList(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

// Accepts edges in any order and orientation; rejects malformed input.
inline Graph ReadEdgeList(std::istream& in) {
  long long n = -1;
  long long m = -1;
  if (!(in >> n >> m) || n < 2 || m < 0) {
    throw std::runtime_error("edge list: bad header, expected \"n m\"");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long a = -1;
    long long b = -1;
    if (!(in >> a >> b) || a < 0 || b < 0 || a >= n || b >= n) {
      throw std::runtime_error("edge list: bad edge line " +
                               std::to_string(i + 2));
    }
    edges.push_back(MakeEdge(static_cast<Vertex>(a), static_cast<Vertex>(b)));
  }
  try {
    return Graph(static_cast<std::size_t>(n), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("edge list: ") + e.what());
  }
}

}  // namespace rainbowk

#endif  // RAINBOWK_GRAPH_HPP_
