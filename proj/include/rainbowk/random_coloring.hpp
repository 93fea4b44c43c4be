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

#ifndef RAINBOWK_RANDOM_COLORING_HPP_
#define RAINBOWK_RANDOM_COLORING_HPP_

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rainbowk/coloring.hpp"
#include "rainbowk/graph.hpp"
#include "rainbowk/rainbow.hpp"
#include "rainbowk/random.hpp"
#include "rainbowk/structure.hpp"
#include "rainbowk/theory.hpp"

namespace rainbowk {

// Uniform color in [1, c] for the pair {a, b} under `seed`. The color is a
// hash of (seed, pair), so it does not depend on which other edges exist:
// colorings of nested graphs drawn with one seed agree on shared edges.
inline Color PairColor(Seed seed, Vertex a, Vertex b, std::size_t c) {
  const Edge e = MakeEdge(a, b);
  const std::uint64_t key = (std::uint64_t{e.u} << 32) | e.v;
  const std::uint64_t bits = SplitMix64(SplitMix64(seed.value) ^ SplitMix64(key));
  return static_cast<Color>(1 + ScaleToRange(bits, c));
}

// Every edge independently uniform in [1, c].
inline EdgeColoring RandomColoring(const Graph& g, std::size_t c, Seed seed) {
  if (c < 1) throw std::invalid_argument("need at least one color");
  std::vector<Color> colors(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    colors[id] = PairColor(seed, g.edge(id).u, g.edge(id).v, c);
  }
  return EdgeColoring(g, c, std::move(colors));
}

struct ColoringOptions {
  std::size_t attempts = 16;
  // Edge probability, when known; otherwise estimated as m / C(n, 2).
  std::optional<double> known_p;
};

struct ColoringSuccess {
  EdgeColoring coloring;
  std::size_t colors_used = 0;
  // Depth picked from the density exponent before any escalation.
  std::size_t depth = 0;
  double epsilon = 0;
  std::size_t attempts_used = 0;
  bool escalated = false;
  // Lower bound on rc_k the density regime predicts (not certified for the
  // concrete graph): colors_used is claimed to be at most this plus one.
  std::size_t claimed_lower_bound = 1;
};

struct ColoringFailure {
  Edge witness;
  std::size_t witness_paths = 0;
  std::size_t attempts = 0;
  std::size_t last_colors = 0;
};

// rc_k = infinity: the graph is not k-vertex-connected.
struct NotKConnected {
  std::size_t k = 0;
};

using ColoringResult = std::variant<ColoringSuccess, ColoringFailure, NotKConnected>;

// Density exponent eps with p = n^(-eps), clamped to [0, 1).
inline double DensityExponent(double p, std::size_t n) {
  if (!(p > 0)) return std::nextafter(1.0, 0.0);
  const double eps = -std::log(p) / std::log(static_cast<double>(n));
  return std::clamp(eps, 0.0, std::nextafter(1.0, 0.0));
}

// Randomized rainbow-k-coloring:
//   0. not k-connected -> NotKConnected; k = 1 on a clique -> one color.
//   1. eps from the edge density, d the depth with (d-2)/(d-1) <= eps < (d-1)/d
//      (capped at m colors).
//   2. Up to `attempts` uniform random d-colorings, each verified exactly;
//      the first rainbow-k-connected one is returned.
//   3. Same with d+1 colors; then ColoringFailure with the last witness.
// Nothing is returned without passing IsRainbowKConnected.
inline ColoringResult RainbowKColor(const Graph& g, std::size_t k, Seed seed,
                                    const ColoringOptions& options = {}) {
  if (k == 0) throw std::invalid_argument("k must be positive");
  if (options.attempts == 0) throw std::invalid_argument("attempts must be positive");
  if (options.known_p && !(*options.known_p > 0 && *options.known_p <= 1)) {
    throw std::invalid_argument("known p must lie in (0, 1]");
  }
  if (!VertexConnectivityAtLeast(g, k)) return NotKConnected{k};
  if (k == 1 && g.is_complete()) {
    return ColoringSuccess{EdgeColoring::Uniform(g, 1, 1), 1, 1, 0.0, 0, false, 1};
  }

  const double p = options.known_p.value_or(static_cast<double>(g.num_edges()) /
                                            static_cast<double>(g.num_pairs()));
  const double eps = DensityExponent(p, g.num_vertices());
  const std::size_t depth = static_cast<std::size_t>(
      std::min<std::uint64_t>(theory::ChooseDepthFromEpsilon(eps), g.num_edges()));
  const std::size_t claimed = std::max<std::size_t>(2, depth - 1);

  ColoringFailure failure;
  std::size_t tried = 0;
  for (std::size_t colors : {depth, depth + 1}) {
    for (std::size_t i = 0; i < options.attempts; ++i) {
      ++tried;
      EdgeColoring col = RandomColoring(g, colors, DeriveSeed(seed, {colors, i}));
      const RainbowVerdict verdict = IsRainbowKConnected(g, col, k);
      if (verdict.connected) {
        return ColoringSuccess{std::move(col), colors, depth,   eps,
                               tried,          colors != depth, claimed};
      }
      failure = ColoringFailure{*verdict.witness, verdict.witness_paths, tried, colors};
    }
  }
  return failure;
}

}  // namespace rainbowk

#endif  // RAINBOWK_RANDOM_COLORING_HPP_
