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

#ifndef RAINBOWK_GROWTH_HPP_
#define RAINBOWK_GROWTH_HPP_

#include <algorithm>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "rainbowk/errors.hpp"
#include "rainbowk/graph.hpp"
#include "rainbowk/packing.hpp"
#include "rainbowk/paths.hpp"
#include "rainbowk/random.hpp"

namespace rainbowk {

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// A b-ary tree of depth d-1 grown inside the graph from `root`.
// levels[i] is the i-th level; parent[x] is x's parent for tree vertices
// below the root and kNoVertex otherwise.
struct TreeGrowth {
  Vertex root = 0;
  std::size_t branching = 0;
  std::vector<std::vector<Vertex>> levels;
  std::vector<Vertex> parent;

  // The child of the root whose subtree contains x (x itself on level 1).
  Vertex ViceRoot(Vertex x) const {
    while (parent[x] != root) x = parent[x];
    return x;
  }
  // Path root -> x along tree edges.
  Path TreePath(Vertex x) const {
    Path p;
    for (Vertex y = x; y != root; y = parent[y]) p.vertices.push_back(y);
    p.vertices.push_back(root);
    std::reverse(p.vertices.begin(), p.vertices.end());
    return p;
  }
};

// Subtree hanging off one child w of the root; its leaves are the
// descendants of w on the deepest level.
struct ViceTree {
  Vertex root = 0;
  std::vector<Vertex> leaves;
};

inline std::vector<ViceTree> ViceTrees(const TreeGrowth& tree) {
  std::vector<ViceTree> out;
  if (tree.levels.size() < 2) return out;
  std::vector<std::size_t> slot(tree.parent.size(), 0);
  for (Vertex w : tree.levels[1]) {
    slot[w] = out.size();
    out.push_back({w, {}});
  }
  for (Vertex leaf : tree.levels.back()) {
    out[slot[tree.ViceRoot(leaf)]].leaves.push_back(leaf);
  }
  return out;
}

enum class NeighborOrder {
  kSampled,      // seeded uniform sample without replacement
  kLowestIndex,  // the b smallest eligible neighbors, seed unused
};

// Tree growth stopped: `vertex` on level `level - 1` had only `eligible`
// usable neighbors where `needed` were required.
struct GrowthFailure {
  std::size_t level = 0;
  Vertex vertex = 0;
  std::size_t eligible = 0;
  std::size_t needed = 0;
};

struct GrownPaths {
  PathPacking packing;
  TreeGrowth tree;
  // Deepest-level tree vertices adjacent to the target.
  std::size_t target_neighbors = 0;
};

using GrowthResult = std::variant<GrownPaths, GrowthFailure>;

// Branching plug-in for pn/10 when only the graph is known: mean degree / 10.
inline std::size_t DefaultBranching(const Graph& g) {
  const std::size_t b = 2 * g.num_edges() / (10 * g.num_vertices());
  return std::max<std::size_t>(1, b);
}

// Internally vertex-disjoint u-v paths of length exactly d from a tree
// grown at u:
//   1. S_0 = {u}. For i = 1 .. d-1 and each w in S_{i-1} in order, pick b
//      distinct neighbors of w outside {v} and all levels built so far
//      (including the partial S_i) and append them to S_i.
//   2. Among the leaves S_{d-1} adjacent to v, keep the lowest-index one
//      per vice-tree.
//   3. Each kept leaf gives tree path u -> leaf plus the edge (leaf, v).
// Leaves in different vice-trees have vertex-disjoint tree paths below the
// root, so the resulting paths share no internal vertex. For d = 2 every
// level-1 vertex is its own vice-tree.
inline GrowthResult GrowDisjointPaths(const Graph& g, Vertex u, Vertex v,
                                      std::size_t d, std::size_t b, Seed seed,
                                      NeighborOrder order = NeighborOrder::kSampled) {
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    throw std::invalid_argument("endpoint out of range");
  }
  if (d < 2) throw std::invalid_argument("depth d must be at least 2");
  if (b < 1) throw std::invalid_argument("branching b must be positive");

  Rng rng(seed);
  TreeGrowth tree;
  tree.root = u;
  tree.branching = b;
  tree.parent.assign(g.num_vertices(), kNoVertex);
  tree.levels.push_back({u});
  std::vector<char> excluded(g.num_vertices(), 0);
  excluded[u] = 1;
  excluded[v] = 1;

  std::vector<Vertex> eligible;
  for (std::size_t level = 1; level < d; ++level) {
    std::vector<Vertex> next;
    for (Vertex w : tree.levels[level - 1]) {
      eligible.clear();
      for (Vertex x : g.neighbors(w)) {
        if (!excluded[x]) eligible.push_back(x);
      }
      if (eligible.size() < b) {
        return GrowthFailure{level, w, eligible.size(), b};
      }
      if (order == NeighborOrder::kSampled) {
        for (std::size_t i = 0; i < b; ++i) {
          const std::size_t j = i + rng.Below(eligible.size() - i);
          std::swap(eligible[i], eligible[j]);
        }
        std::sort(eligible.begin(), eligible.begin() + b);
      }
      for (std::size_t i = 0; i < b; ++i) {
        const Vertex x = eligible[i];
        excluded[x] = 1;
        tree.parent[x] = w;
        next.push_back(x);
      }
    }
    tree.levels.push_back(std::move(next));
  }

  GrownPaths out;
  out.packing.u = u;
  out.packing.v = v;
  std::vector<Vertex> leaves = tree.levels.back();
  std::sort(leaves.begin(), leaves.end());
  std::vector<char> vice_taken(g.num_vertices(), 0);
  for (Vertex leaf : leaves) {
    if (!g.has_edge(leaf, v)) continue;
    ++out.target_neighbors;
    const Vertex vice = tree.ViceRoot(leaf);
    if (vice_taken[vice]) continue;
    vice_taken[vice] = 1;
    Path p = tree.TreePath(leaf);
    p.vertices.push_back(v);
    out.packing.paths.push_back(std::move(p));
  }
  std::sort(out.packing.paths.begin(), out.packing.paths.end());
  out.tree = std::move(tree);
  return out;
}

inline constexpr std::size_t kDefaultPathBudget = 200000;

// Exact maximum number of internally vertex-disjoint u-v paths with exactly
// d edges: every such path is enumerated, then packed exactly.
inline std::size_t CountDisjointLengthDPaths(
    const Graph& g, Vertex u, Vertex v, std::size_t d,
    std::size_t path_budget = kDefaultPathBudget) {
  if (u == v) throw std::invalid_argument("endpoints must differ");
  if (u >= g.num_vertices() || v >= g.num_vertices()) {
    throw std::invalid_argument("endpoint out of range");
  }
  if (d < 1) throw std::invalid_argument("length d must be positive");
  if (d >= g.num_vertices()) return 0;

  std::vector<Path> paths;
  std::vector<char> on_path(g.num_vertices(), 0);
  std::vector<Vertex> stack{u};
  on_path[u] = 1;
  on_path[v] = 1;
  auto extend = [&](auto& self, Vertex x, std::size_t remaining) -> void {
    if (remaining == 1) {
      if (g.has_edge(x, v)) {
        if (paths.size() == path_budget) {
          throw BudgetExceeded("more than " + std::to_string(path_budget) +
                               " length-" + std::to_string(d) + " paths");
        }
        stack.push_back(v);
        paths.push_back(Path{stack});
        stack.pop_back();
      }
      return;
    }
    for (Vertex y : g.neighbors(x)) {
      if (on_path[y]) continue;
      on_path[y] = 1;
      stack.push_back(y);
      self(self, y, remaining - 1);
      stack.pop_back();
      on_path[y] = 0;
    }
  };
  extend(extend, u, d);
  return MaxDisjointPacking(paths, std::numeric_limits<std::size_t>::max()).count;
}

}  // namespace rainbowk

#endif  // RAINBOWK_GROWTH_HPP_
