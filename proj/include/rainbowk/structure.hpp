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

#ifndef RAINBOWK_STRUCTURE_HPP_
#define RAINBOWK_STRUCTURE_HPP_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "rainbowk/graph.hpp"

namespace rainbowk {

// Shortest-path length, or Infinite for unreachable / disconnected.
class Distance {
 public:
  static constexpr Distance Infinite() { return Distance(); }
  constexpr explicit Distance(std::size_t value) : finite_(true), value_(value) {}

  constexpr bool is_infinite() const { return !finite_; }
  constexpr bool is_finite() const { return finite_; }
  constexpr std::size_t value() const {
    if (!finite_) throw std::logic_error("value() of an infinite distance");
    return value_;
  }

  friend constexpr bool operator==(const Distance&, const Distance&) = default;
  friend constexpr std::strong_ordering operator<=>(const Distance& a,
                                                    const Distance& b) {
    if (a.finite_ != b.finite_) {
      return a.finite_ ? std::strong_ordering::less
                       : std::strong_ordering::greater;
    }
    return a.value_ <=> b.value_;
  }

 private:
  constexpr Distance() = default;
  bool finite_ = false;
  std::size_t value_ = 0;
};

inline constexpr std::int64_t kUnreachable = -1;

inline std::vector<std::int64_t> BfsDistances(const Graph& g, Vertex source) {
  std::vector<std::int64_t> dist(g.num_vertices(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.num_vertices());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

inline bool IsConnected(const Graph& g) {
  for (std::int64_t d : BfsDistances(g, 0)) {
    if (d == kUnreachable) return false;
  }
  return true;
}

namespace detail {

// Row-per-vertex adjacency bitsets.
class AdjacencyBits {
 public:
  explicit AdjacencyBits(const Graph& g)
      : words_((g.num_vertices() + 63) / 64),
        bits_(g.num_vertices() * words_, 0) {
    for (const Edge& e : g.edges()) {
      bits_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
      bits_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
    }
  }
  std::size_t words() const { return words_; }
  const std::uint64_t* row(Vertex v) const { return bits_.data() + v * words_; }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// Level-synchronous BFS on bitsets from `source`, stopping after `max_levels`
// levels. Returns the number of levels needed to reach everything, or
// Infinite if some vertex stays unreached.
inline Distance BitsetEccentricity(const AdjacencyBits& adj, std::size_t n,
                                   Vertex source, std::size_t max_levels) {
  const std::size_t words = adj.words();
  std::vector<std::uint64_t> visited(words, 0);
  std::vector<std::uint64_t> frontier(words, 0);
  std::vector<std::uint64_t> next(words);
  visited[source / 64] |= std::uint64_t{1} << (source % 64);
  frontier[source / 64] = visited[source / 64];
  std::size_t reached = 1;
  std::size_t level = 0;
  while (reached < n && level < max_levels) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t bits = frontier[w];
      while (bits != 0) {
        const auto x = static_cast<Vertex>(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
        const std::uint64_t* row = adj.row(x);
        for (std::size_t j = 0; j < words; ++j) next[j] |= row[j];
      }
    }
    std::size_t added = 0;
    for (std::size_t j = 0; j < words; ++j) {
      next[j] &= ~visited[j];
      visited[j] |= next[j];
      added += static_cast<std::size_t>(std::popcount(next[j]));
    }
    if (added == 0) break;
    reached += added;
    frontier.swap(next);
    ++level;
  }
  return reached == n ? Distance(level) : Distance::Infinite();
}

inline Distance DiameterByBitsets(const Graph& g) {
  const AdjacencyBits adj(g);
  std::size_t best = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    const Distance ecc = BitsetEccentricity(
        adj, g.num_vertices(), s, std::numeric_limits<std::size_t>::max());
    if (ecc.is_infinite()) return ecc;
    best = std::max(best, ecc.value());
  }
  return Distance(best);
}

inline Distance DiameterByBfs(const Graph& g) {
  std::int64_t best = 0;
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    for (std::int64_t d : BfsDistances(g, s)) {
      if (d == kUnreachable) return Distance::Infinite();
      best = std::max(best, d);
    }
  }
  return Distance(static_cast<std::size_t>(best));
}

inline constexpr std::size_t kBitsetVertexLimit = 8192;

}  // namespace detail

// Maximum shortest-path length over vertex pairs; Infinite iff disconnected.
// All-pairs BFS, on adjacency bitsets when n is small enough to make that
// the cheaper route.
inline Distance Diameter(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n <= detail::kBitsetVertexLimit && n * n <= 128 * g.num_edges()) {
    return detail::DiameterByBitsets(g);
  }
  return detail::DiameterByBfs(g);
}

inline bool DiameterAtMost(const Graph& g, std::size_t bound) {
  if (g.num_vertices() > detail::kBitsetVertexLimit) {
    const Distance d = detail::DiameterByBfs(g);
    return d.is_finite() && d.value() <= bound;
  }
  const detail::AdjacencyBits adj(g);
  for (Vertex s = 0; s < g.num_vertices(); ++s) {
    if (detail::BitsetEccentricity(adj, g.num_vertices(), s, bound)
            .is_infinite()) {
      return false;
    }
  }
  return true;
}

// Iterative Tarjan low-link search.
inline bool HasArticulationPoint(const Graph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::size_t kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> order(n, kUnseen);
  std::vector<std::size_t> low(n, 0);
  std::vector<std::size_t> next_child(n, 0);
  std::vector<Vertex> parent(n, 0);
  std::size_t counter = 0;
  for (Vertex root = 0; root < n; ++root) {
    if (order[root] != kUnseen) continue;
    std::size_t root_children = 0;
    std::vector<Vertex> stack{root};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      const auto nbrs = g.neighbors(x);
      if (next_child[x] < nbrs.size()) {
        const Vertex y = nbrs[next_child[x]++];
        if (order[y] == kUnseen) {
          parent[y] = x;
          order[y] = low[y] = counter++;
          if (x == root) ++root_children;
          stack.push_back(y);
        } else if (!(x != root && y == parent[x])) {
          low[x] = std::min(low[x], order[y]);
        }
        continue;
      }
      stack.pop_back();
      if (x == root) continue;
      const Vertex p = parent[x];
      low[p] = std::min(low[p], low[x]);
      if (p != root && low[x] >= order[p]) return true;
    }
    if (root_children > 1) return true;
  }
  return false;
}

// Unit-capacity flow network for counting internally vertex-disjoint paths.
// Each vertex x is split into x_in = 2x and x_out = 2x+1 joined by a
// capacity-1 arc; each edge {a, b} becomes a_out -> b_in and b_out -> a_in.
// Paths from s to t correspond to flow from s_out to t_in, and a direct
// s-t edge carries exactly one unit.
class VertexFlowNetwork {
 public:
  explicit VertexFlowNetwork(const Graph& g) : graph_(g) {
    const std::size_t nodes = 2 * g.num_vertices();
    head_.assign(nodes, kNone);
    arcs_.reserve(2 * (g.num_vertices() + 2 * g.num_edges()));
    for (Vertex x = 0; x < g.num_vertices(); ++x) AddArc(2 * x, 2 * x + 1);
    for (const Edge& e : g.edges()) {
      AddArc(2 * e.u + 1, 2 * e.v);
      AddArc(2 * e.v + 1, 2 * e.u);
    }
  }

  // min(limit, maximum number of internally vertex-disjoint s-t paths).
  std::size_t MaxDisjointPaths(Vertex s, Vertex t, std::size_t limit) {
    if (s == t) throw std::invalid_argument("endpoints must differ");
    for (Arc& a : arcs_) a.residual = a.capacity;
    const std::size_t source = 2 * s + 1;
    const std::size_t sink = 2 * t;
    std::size_t flow = 0;
    std::vector<std::size_t> via(head_.size());
    std::vector<std::size_t> queue;
    queue.reserve(head_.size());
    while (flow < limit) {
      std::fill(via.begin(), via.end(), kNone);
      via[source] = kRoot;
      queue.clear();
      queue.push_back(source);
      for (std::size_t qi = 0; qi < queue.size() && via[sink] == kNone; ++qi) {
        const std::size_t x = queue[qi];
        for (std::size_t a = head_[x]; a != kNone; a = arcs_[a].next) {
          const std::size_t y = arcs_[a].to;
          if (arcs_[a].residual > 0 && via[y] == kNone) {
            via[y] = a;
            queue.push_back(y);
          }
        }
      }
      if (via[sink] == kNone) break;
      for (std::size_t x = sink; x != source;) {
        const std::size_t a = via[x];
        --arcs_[a].residual;
        ++arcs_[a ^ 1].residual;
        x = arcs_[a ^ 1].to;
      }
      ++flow;
    }
    return flow;
  }

  const Graph& graph() const { return graph_; }

 private:
  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  static constexpr std::size_t kRoot = kNone - 1;

  struct Arc {
    std::size_t to;
    std::size_t next;
    int capacity;
    int residual;
  };

  void AddArc(std::size_t from, std::size_t to) {
    arcs_.push_back({to, head_[from], 1, 1});
    head_[from] = arcs_.size() - 1;
    arcs_.push_back({from, head_[to], 0, 0});
    head_[to] = arcs_.size() - 1;
  }

  const Graph& graph_;
  std::vector<std::size_t> head_;
  std::vector<Arc> arcs_;
};

inline std::size_t LocalVertexConnectivity(const Graph& g, Vertex s, Vertex t,
                                           std::size_t limit) {
  VertexFlowNetwork net(g);
  return net.MaxDisjointPaths(s, t, limit);
}

namespace detail {

// If some pair has fewer than k disjoint paths, a separator S with |S| < k
// exists; one of the vertices 0..k-1 lies outside S and is cut off from some
// vertex w by it. Checking those k * (n - 1) pairs is therefore exact.
inline bool VertexConnectivityAtLeastByFlow(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > g.num_vertices() - 1) return false;
  VertexFlowNetwork net(g);
  for (Vertex i = 0; i < k; ++i) {
    for (Vertex w = i + 1; w < g.num_vertices(); ++w) {
      if (net.MaxDisjointPaths(i, w, k) < k) return false;
    }
  }
  return true;
}

}  // namespace detail

// True iff every pair of distinct vertices is joined by at least k
// internally vertex-disjoint paths (a direct edge counts as one).
inline bool VertexConnectivityAtLeast(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (k > g.num_vertices() - 1) return false;
  if (k == 1) return IsConnected(g);
  if (k == 2) return IsConnected(g) && !HasArticulationPoint(g);
  return detail::VertexConnectivityAtLeastByFlow(g, k);
}

}  // namespace rainbowk

#endif  // RAINBOWK_STRUCTURE_HPP_
