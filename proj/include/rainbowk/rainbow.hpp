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

#ifndef RAINBOWK_RAINBOW_HPP_
#define RAINBOWK_RAINBOW_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbowk/coloring.hpp"
#include "rainbowk/errors.hpp"
#include "rainbowk/graph.hpp"
#include "rainbowk/packing.hpp"
#include "rainbowk/paths.hpp"
#include "rainbowk/structure.hpp"

namespace rainbowk {

namespace detail {

// O(1) color-of-pair lookup (0 = no edge). Dense matrix for small graphs,
// binary search in the neighbor lists otherwise.
class PairColors {
 public:
  static constexpr std::size_t kDenseLimit = 2048;

  PairColors(const Graph& g, const EdgeColoring& col) : graph_(g), col_(col) {
    const std::size_t n = g.num_vertices();
    if (n <= kDenseLimit) {
      dense_.assign(n * n, 0);
      for (EdgeId id = 0; id < g.num_edges(); ++id) {
        const Edge& e = g.edge(id);
        dense_[e.u * n + e.v] = col[id];
        dense_[e.v * n + e.u] = col[id];
      }
    }
  }

  Color operator()(Vertex a, Vertex b) const {
    if (!dense_.empty()) return dense_[a * graph_.num_vertices() + b];
    const auto id = graph_.edge_id(a, b);
    return id ? col_[*id] : 0;
  }

 private:
  const Graph& graph_;
  const EdgeColoring& col_;
  std::vector<Color> dense_;
};

// Depth-first enumeration of the rainbow u-v paths with at most
// min(max_len, c) edges: a color already on the current prefix is never
// reused, and the last hop into v is a single lookup. Visits in
// lexicographic order of vertex sequence.
class RainbowPathWalker {
 public:
  RainbowPathWalker(const Graph& g, const EdgeColoring& col)
      : graph_(g),
        col_(col),
        lookup_(g, col),
        on_path_(g.num_vertices(), 0),
        color_used_(col.num_colors() + 1, 0) {}

  // visit(const std::vector<Vertex>& path) -> bool; false stops the walk.
  template <typename Visitor>
  void Walk(Vertex u, Vertex v, std::size_t max_len, Visitor&& visit) {
    target_ = v;
    limit_ = std::min(max_len, col_.num_colors());
    stack_.assign(1, u);
    on_path_[u] = 1;
    stopped_ = false;
    Extend(u, limit_, visit);
    on_path_[u] = 0;
  }

 private:
  template <typename Visitor>
  void Extend(Vertex x, std::size_t remaining, Visitor& visit) {
    if (remaining == 1) {
      const Color c = lookup_(x, target_);
      if (c != 0 && !color_used_[c]) Emit(visit);
      return;
    }
    const auto nbrs = graph_.neighbors(x);
    const auto ids = graph_.incident_edges(x);
    for (std::size_t i = 0; i < nbrs.size() && !stopped_; ++i) {
      const Vertex y = nbrs[i];
      const Color c = col_[ids[i]];
      if (color_used_[c]) continue;
      if (y == target_) {
        Emit(visit);
        continue;
      }
      if (on_path_[y]) continue;
      on_path_[y] = 1;
      color_used_[c] = 1;
      stack_.push_back(y);
      Extend(y, remaining - 1, visit);
      stack_.pop_back();
      color_used_[c] = 0;
      on_path_[y] = 0;
    }
  }

  template <typename Visitor>
  void Emit(Visitor& visit) {
    stack_.push_back(target_);
    if (!visit(static_cast<const std::vector<Vertex>&>(stack_))) stopped_ = true;
    stack_.pop_back();
  }

  const Graph& graph_;
  const EdgeColoring& col_;
  PairColors lookup_;
  std::vector<char> on_path_;
  std::vector<char> color_used_;
  std::vector<Vertex> stack_;
  Vertex target_ = 0;
  std::size_t limit_ = 0;
  bool stopped_ = false;
};

inline void CheckPair(const Graph& g, Vertex u, Vertex v) {
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    throw std::invalid_argument("endpoint out of range");
  }
}

// Counts disjoint rainbow u-v paths up to `target`. Paths are packed
// greedily while they stream out of the walker, which settles most pairs
// without materializing the full list; only when the greedy pass falls
// short is the exact packer run over everything enumerated.
class RainbowPairCounter {
 public:
  RainbowPairCounter(const Graph& g, const EdgeColoring& col)
      : walker_(g, col), stamp_(g.num_vertices(), 0) {}

  std::size_t Count(Vertex u, Vertex v, std::size_t target) {
    if (target == 0) return 0;
    ++epoch_;
    paths_.clear();
    std::size_t greedy = 0;
    walker_.Walk(u, v, std::numeric_limits<std::size_t>::max(),
                 [&](const std::vector<Vertex>& p) {
                   bool free = true;
                   for (std::size_t i = 1; i + 1 < p.size() && free; ++i) {
                     free = stamp_[p[i]] != epoch_;
                   }
                   if (free) {
                     for (std::size_t i = 1; i + 1 < p.size(); ++i) {
                       stamp_[p[i]] = epoch_;
                     }
                     if (++greedy >= target) return false;
                   }
                   paths_.push_back(Path{p});
                   return true;
                 });
    if (greedy >= target) return target;
    return MaxDisjointPacking(paths_, target).count;
  }

 private:
  RainbowPathWalker walker_;
  std::vector<std::uint64_t> stamp_;
  std::uint64_t epoch_ = 0;
  std::vector<Path> paths_;
};

}  // namespace detail

// All rainbow u-v paths of length <= min(max_len, c), in canonical
// (length, then lexicographic) order.
inline std::vector<Path> EnumerateRainbowPaths(const Graph& g,
                                               const EdgeColoring& col,
                                               Vertex u, Vertex v,
                                               std::size_t max_len) {
  detail::CheckPair(g, u, v);
  if (max_len == 0) throw std::invalid_argument("max_len must be positive");
  std::vector<Path> out;
  detail::RainbowPathWalker walker(g, col);
  walker.Walk(u, v, max_len, [&](const std::vector<Vertex>& p) {
    out.push_back(Path{p});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

// min(k_target, maximum number of internally vertex-disjoint rainbow u-v
// paths). Exact.
inline std::size_t MaxDisjointRainbowPaths(const Graph& g,
                                           const EdgeColoring& col, Vertex u,
                                           Vertex v, std::size_t k_target) {
  detail::CheckPair(g, u, v);
  const std::vector<Path> paths =
      EnumerateRainbowPaths(g, col, u, v, col.num_colors());
  return MaxDisjointPacking(paths, k_target).count;
}

struct RainbowVerdict {
  bool connected = false;
  // Lexicographically first pair with fewer than k disjoint rainbow paths.
  std::optional<Edge> witness;
  // Disjoint rainbow paths found for the witness pair.
  std::size_t witness_paths = 0;

  explicit operator bool() const { return connected; }
};

inline RainbowVerdict IsRainbowKConnected(const Graph& g,
                                          const EdgeColoring& col,
                                          std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (col.size() != g.num_edges()) {
    throw std::invalid_argument("coloring does not match graph");
  }
  detail::RainbowPairCounter counter(g, col);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    for (Vertex v = u + 1; v < g.num_vertices(); ++v) {
      const std::size_t found = counter.Count(u, v, k);
      if (found < k) return RainbowVerdict{false, Edge{u, v}, found};
    }
  }
  return RainbowVerdict{true, std::nullopt, 0};
}

// rc_k as returned by the exact oracle. Ordered finite < Exceeds < Infinite.
class RcValue {
 public:
  enum class Kind { kFinite, kExceeds, kInfinite };

  static constexpr RcValue Finite(std::size_t colors) {
    return RcValue(Kind::kFinite, colors);
  }
  // k-connected, but needs more colors than the search was allowed.
  static constexpr RcValue Exceeds() { return RcValue(Kind::kExceeds, 0); }
  // Not k-vertex-connected: no coloring works.
  static constexpr RcValue Infinite() { return RcValue(Kind::kInfinite, 0); }

  constexpr Kind kind() const { return kind_; }
  constexpr bool is_finite() const { return kind_ == Kind::kFinite; }
  constexpr std::size_t value() const {
    if (kind_ != Kind::kFinite) throw std::logic_error("rc value is not finite");
    return colors_;
  }

  friend constexpr bool operator==(const RcValue&, const RcValue&) = default;
  friend constexpr std::strong_ordering operator<=>(const RcValue& a,
                                                    const RcValue& b) {
    if (auto c = a.kind_ <=> b.kind_; c != 0) return c;
    return a.colors_ <=> b.colors_;
  }

  std::string ToString() const {
    switch (kind_) {
      case Kind::kFinite:
        return std::to_string(colors_);
      case Kind::kExceeds:
        return "EXCEEDS";
      case Kind::kInfinite:
        return "INFINITE";
    }
    return "";
  }

 private:
  constexpr RcValue(Kind kind, std::size_t colors) : kind_(kind), colors_(colors) {}
  Kind kind_;
  std::size_t colors_;
};

struct RcResult {
  RcValue value = RcValue::Infinite();
  // An accepting coloring with value() colors, when the value is finite.
  std::optional<EdgeColoring> certificate;
  std::size_t colorings_checked = 0;
};

inline constexpr std::size_t kDefaultRcEdgeBudget = 12;

namespace detail {

// Restricted-growth enumeration of colorings using exactly `c` colors: edge
// 0 gets color 1 and every new color is one more than the largest used so
// far along the edge order. Each class of colorings equal up to renaming
// colors is visited once.
class CanonicalColoringSearch {
 public:
  CanonicalColoringSearch(const Graph& g, std::size_t k) : graph_(g), k_(k) {}

  std::optional<EdgeColoring> Find(std::size_t c) {
    colors_.assign(graph_.num_edges(), 0);
    num_colors_ = c;
    found_.reset();
    if (c == 0 || c > graph_.num_edges()) return std::nullopt;
    Assign(0, 0);
    return found_;
  }

  std::size_t checked() const { return checked_; }

 private:
  bool Assign(std::size_t edge, std::size_t max_used) {
    const std::size_t m = graph_.num_edges();
    if (edge == m) {
      if (max_used != num_colors_) return false;
      ++checked_;
      EdgeColoring col(graph_, num_colors_, colors_);
      if (IsRainbowKConnected(graph_, col, k_)) {
        found_.emplace(std::move(col));
        return true;
      }
      return false;
    }
    // Not enough edges left to introduce the missing colors.
    if (num_colors_ - max_used > m - edge) return false;
    const std::size_t top = std::min(max_used + 1, num_colors_);
    for (std::size_t color = 1; color <= top; ++color) {
      colors_[edge] = static_cast<Color>(color);
      if (Assign(edge + 1, std::max(max_used, color))) return true;
    }
    return false;
  }

  const Graph& graph_;
  std::size_t k_;
  std::size_t num_colors_ = 0;
  std::vector<Color> colors_;
  std::optional<EdgeColoring> found_;
  std::size_t checked_ = 0;
};

}  // namespace detail

// Exact rc_k(g) by exhaustive search, for small graphs only. Tries color
// counts from max(diameter, 2) upward (1 only when k = 1 and g is
// complete). With c = m every path is rainbow, so a k-connected graph
// always resolves by then; Exceeds means max_colors < rc_k(g). Graphs that
// reach the search with more than edge_budget edges are refused.
inline RcResult RcKExact(const Graph& g, std::size_t k, std::size_t max_colors,
                         std::size_t edge_budget = kDefaultRcEdgeBudget) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (max_colors == 0) throw std::invalid_argument("max_colors must be positive");
  RcResult result;
  if (!VertexConnectivityAtLeast(g, k)) return result;
  if (k == 1 && g.is_complete()) {
    result.value = RcValue::Finite(1);
    result.certificate = EdgeColoring::Uniform(g, 1, 1);
    result.colorings_checked = 1;
    return result;
  }
  // The budget bounds the search only; the answers above need none.
  if (g.num_edges() > edge_budget) {
    throw BudgetExceeded("rc_k oracle refuses graphs with more than " +
                         std::to_string(edge_budget) + " edges (got " +
                         std::to_string(g.num_edges()) + ")");
  }
  const std::size_t lower = std::max<std::size_t>(2, Diameter(g).value());
  const std::size_t upper = std::min(max_colors, g.num_edges());
  detail::CanonicalColoringSearch search(g, k);
  for (std::size_t c = lower; c <= upper; ++c) {
    if (auto col = search.Find(c)) {
      result.value = RcValue::Finite(c);
      result.certificate = std::move(col);
      result.colorings_checked = search.checked();
      return result;
    }
  }
  result.value = RcValue::Exceeds();
  result.colorings_checked = search.checked();
  return result;
}

}  // namespace rainbowk

#endif  // RAINBOWK_RAINBOW_HPP_
