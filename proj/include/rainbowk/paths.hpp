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

#ifndef RAINBOWK_PATHS_HPP_
#define RAINBOWK_PATHS_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rainbowk/graph.hpp"

namespace rainbowk {

// A vertex sequence v_0 .. v_L; length() counts edges.
struct Path {
  std::vector<Vertex> vertices;

  std::size_t length() const {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }
  std::span<const Vertex> internal() const {
    if (vertices.size() < 2) return {};
    return {vertices.data() + 1, vertices.size() - 2};
  }

  friend bool operator==(const Path&, const Path&) = default;
  // Canonical order: shorter first, then lexicographic.
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    if (auto c = a.vertices.size() <=> b.vertices.size(); c != 0) return c;
    return a.vertices <=> b.vertices;
  }
};

using RainbowPath = Path;

// Certificate of internally vertex-disjoint u-v paths.
struct PathPacking {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  friend bool operator==(const PathPacking&, const PathPacking&) = default;
};

// nullopt when `path` is a simple path in g from u to v, otherwise the reason.
inline std::optional<std::string> CheckPath(const Graph& g, const Path& path,
                                            Vertex u, Vertex v) {
  const auto& vs = path.vertices;
  if (vs.size() < 2) return "path has fewer than two vertices";
  if (vs.front() != u || vs.back() != v) return "path endpoints differ from the pair";
  std::vector<Vertex> sorted = vs;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    return "path repeats a vertex";
  }
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    if (vs[i] >= g.num_vertices() || vs[i + 1] >= g.num_vertices() ||
        !g.has_edge(vs[i], vs[i + 1])) {
      return "missing edge " + std::to_string(vs[i]) + "-" +
             std::to_string(vs[i + 1]);
    }
  }
  return std::nullopt;
}

// Re-verifies a packing from scratch: every path simple, in g, between the
// endpoints, of `exact_length` edges when given, and no internal vertex
// shared between two paths.
inline std::optional<std::string> CheckPacking(
    const Graph& g, const PathPacking& packing,
    std::optional<std::size_t> exact_length = std::nullopt) {
  if (packing.u == packing.v) return "packing endpoints coincide";
  std::vector<Vertex> internal;
  for (std::size_t i = 0; i < packing.paths.size(); ++i) {
    const Path& p = packing.paths[i];
    if (auto err = CheckPath(g, p, packing.u, packing.v)) {
      return "path " + std::to_string(i) + ": " + *err;
    }
    if (exact_length && p.length() != *exact_length) {
      return "path " + std::to_string(i) + " has length " +
             std::to_string(p.length());
    }
    internal.insert(internal.end(), p.internal().begin(), p.internal().end());
  }
  std::sort(internal.begin(), internal.end());
  if (auto it = std::adjacent_find(internal.begin(), internal.end());
      it != internal.end()) {
    return "internal vertex " + std::to_string(*it) + " used twice";
  }
  return std::nullopt;
}

// Text block: "u v count", then one space-separated vertex sequence per line.
inline void WritePathPacking(std::ostream& out, const PathPacking& packing) {
  out << packing.u << ' ' << packing.v << ' ' << packing.paths.size() << '\n';
  for (const Path& p : packing.paths) {
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
      out << (i ? " " : "") << p.vertices[i];
    }
    out << '\n';
  }
}

inline PathPacking ReadPathPacking(std::istream& in) {
  PathPacking packing;
  long long count = -1;
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("packing: missing header");
  std::istringstream header(line);
  if (!(header >> packing.u >> packing.v >> count) || count < 0) {
    throw std::runtime_error("packing: bad header, expected \"u v count\"");
  }
  for (long long i = 0; i < count; ++i) {
    if (!std::getline(in, line)) {
      throw std::runtime_error("packing: expected " + std::to_string(count) +
                               " paths");
    }
    std::istringstream row(line);
    Path p;
    for (Vertex x; row >> x;) p.vertices.push_back(x);
    if (!row.eof() || p.vertices.size() < 2) {
      throw std::runtime_error("packing: bad path line " + std::to_string(i + 2));
    }
    packing.paths.push_back(std::move(p));
  }
  return packing;
}

}  // namespace rainbowk

#endif  // RAINBOWK_PATHS_HPP_
