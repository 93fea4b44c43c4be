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

#ifndef RAINBOWK_COLORING_HPP_
#define RAINBOWK_COLORING_HPP_

#include <cstddef>
#include <cstdint>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbowk/graph.hpp"
#include "rainbowk/paths.hpp"

namespace rainbowk {

using Color = std::uint32_t;

// Total map from the edges of a graph (by EdgeId) to colors in [1, c].
// The coloring refers to its graph by structure only: it is valid for any
// graph with the same edge count, and is meaningful for the one it was
// built against.
class EdgeColoring {
 public:
  EdgeColoring(const Graph& g, std::size_t num_colors, std::vector<Color> colors)
      : num_colors_(num_colors), colors_(std::move(colors)) {
    if (num_colors_ < 1) throw std::invalid_argument("need at least one color");
    if (colors_.size() != g.num_edges()) {
      throw std::invalid_argument("coloring has " +
                                  std::to_string(colors_.size()) +
                                  " entries for " +
                                  std::to_string(g.num_edges()) + " edges");
    }
    for (Color c : colors_) {
      if (c < 1 || c > num_colors_) {
        throw std::invalid_argument("color " + std::to_string(c) +
                                    " outside [1, " +
                                    std::to_string(num_colors_) + "]");
      }
    }
  }

  static EdgeColoring Uniform(const Graph& g, Color color, std::size_t num_colors) {
    return EdgeColoring(g, num_colors, std::vector<Color>(g.num_edges(), color));
  }

  std::size_t num_colors() const { return num_colors_; }
  std::size_t size() const { return colors_.size(); }
  Color operator[](EdgeId id) const { return colors_[id]; }
  std::span<const Color> colors() const { return colors_; }

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t num_colors_;
  std::vector<Color> colors_;
};

// True iff consecutive vertices are adjacent and the edge colors are
// pairwise distinct. Does not check simplicity.
inline bool IsRainbow(const Graph& g, const EdgeColoring& col, const Path& path) {
  std::vector<char> seen(col.num_colors() + 1, 0);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i) {
    const auto id = g.edge_id(path.vertices[i], path.vertices[i + 1]);
    if (!id) return false;
    const Color c = col[*id];
    if (seen[c]) return false;
    seen[c] = 1;
  }
  return true;
}

// Text format: a line "c", then "u v color" per edge in canonical edge order.
inline void WriteColoring(std::ostream& out, const Graph& g,
                          const EdgeColoring& col) {
  out << col.num_colors() << '\n';
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    out << g.edge(id).u << ' ' << g.edge(id).v << ' ' << col[id] << '\n';
  }
}

inline EdgeColoring ReadColoring(std::istream& in, const Graph& g) {
  long long c = 0;
  if (!(in >> c) || c < 1) throw std::runtime_error("coloring: bad color count");
  std::vector<Color> colors(g.num_edges());
  for (EdgeId id = 0; id < g.num_edges(); ++id) {
    long long a = -1;
    long long b = -1;
    long long color = 0;
    if (!(in >> a >> b >> color)) {
      throw std::runtime_error("coloring: expected " +
                               std::to_string(g.num_edges()) + " edge lines");
    }
    const Edge& e = g.edge(id);
    if (a != e.u || b != e.v) {
      throw std::runtime_error("coloring: line " + std::to_string(id + 2) +
                               " does not match edge " + std::to_string(e.u) +
                               " " + std::to_string(e.v));
    }
    if (color < 1 || color > c) {
      throw std::runtime_error("coloring: color out of range on line " +
                               std::to_string(id + 2));
    }
    colors[id] = static_cast<Color>(color);
  }
  std::string rest;
  if (in >> rest) throw std::runtime_error("coloring: trailing data");
  return EdgeColoring(g, static_cast<std::size_t>(c), std::move(colors));
}

}  // namespace rainbowk

#endif  // RAINBOWK_COLORING_HPP_
