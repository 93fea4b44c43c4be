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

#ifndef RAINBOWK_GNP_HPP_
#define RAINBOWK_GNP_HPP_

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rainbowk/graph.hpp"
#include "rainbowk/random.hpp"

namespace rainbowk {

// Erdos-Renyi G(n, p). Exactly one uniform draw is consumed per vertex pair,
// in lexicographic pair order, and the pair becomes an edge iff draw < p.
// Two calls with the same seed therefore see the same draws, so
// p1 <= p2 implies edges(G(n, p1)) is a subset of edges(G(n, p2)).
inline Graph GenerateGnp(std::size_t n, double p, Seed seed) {
  if (n < 2) throw std::invalid_argument("G(n,p) needs n >= 2");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("G(n,p) needs p in [0, 1]");
  }
  Rng rng(seed);
  std::vector<Edge> edges;
  const double expected = p * static_cast<double>(n) * (n - 1) / 2;
  edges.reserve(static_cast<std::size_t>(expected + 4 * std::sqrt(expected) + 16));
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (rng.Uniform01() < p) edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace rainbowk

#endif  // RAINBOWK_GNP_HPP_
