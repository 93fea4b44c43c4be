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

#ifndef RAINBOWK_PACKING_HPP_
#define RAINBOWK_PACKING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <unordered_map>
#include <vector>

#include "rainbowk/paths.hpp"

namespace rainbowk {

struct PackingResult {
  std::size_t count = 0;
  // Indices into the input of one optimal (or target-reaching) packing.
  std::vector<std::size_t> chosen;
};

// Exact maximum number of paths with pairwise disjoint internal vertex sets,
// with the search cut off as soon as `target` paths are packed. The result
// is min(target, optimum).
//
// Paths without internal vertices never conflict and are always taken. The
// rest are tried in order of increasing internal size; a greedy pass gives
// the first incumbent, then depth-first branch and bound where a node is
// pruned once (packed + compatible paths remaining) cannot beat it.
class DisjointPathPacker {
 public:
  explicit DisjointPathPacker(std::span<const Path> paths) : paths_(paths) {}

  PackingResult Solve(std::size_t target) {
    PackingResult result;
    if (target == 0) return result;
    std::vector<std::size_t> nontrivial;
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      if (paths_[i].internal().empty()) {
        result.chosen.push_back(i);
      } else {
        nontrivial.push_back(i);
      }
    }
    if (result.chosen.size() >= target) {
      result.chosen.resize(target);
      result.count = target;
      return result;
    }
    // More than every remaining path cannot be packed.
    need_ = std::min(target - result.chosen.size(), nontrivial.size());
    std::stable_sort(nontrivial.begin(), nontrivial.end(),
                     [&](std::size_t a, std::size_t b) {
                       return paths_[a].vertices.size() <
                              paths_[b].vertices.size();
                     });
    order_ = std::move(nontrivial);
    BuildMasks();

    best_.clear();
    std::vector<std::uint64_t> used(words_, 0);
    for (std::size_t j = 0; j < order_.size() && best_.size() < need_; ++j) {
      if (Compatible(j, used.data())) {
        Mark(j, used.data());
        best_.push_back(j);
      }
    }
    if (best_.size() < need_) {
      std::vector<std::size_t> current;
      scratch_.assign((need_ + 1) * words_, 0);
      Search(0, current);
    }
    for (std::size_t j : best_) result.chosen.push_back(order_[j]);
    std::sort(result.chosen.begin(), result.chosen.end());
    result.count = result.chosen.size();
    return result;
  }

  // Search-tree nodes visited by the last Solve (diagnostics).
  std::size_t nodes() const { return nodes_; }

 private:
  void BuildMasks() {
    std::unordered_map<Vertex, std::size_t> compact;
    for (std::size_t j : order_) {
      for (Vertex x : paths_[j].internal()) compact.emplace(x, compact.size());
    }
    words_ = std::max<std::size_t>(1, (compact.size() + 63) / 64);
    masks_.assign(order_.size() * words_, 0);
    for (std::size_t j = 0; j < order_.size(); ++j) {
      for (Vertex x : paths_[order_[j]].internal()) {
        const std::size_t bit = compact[x];
        masks_[j * words_ + bit / 64] |= std::uint64_t{1} << (bit % 64);
      }
    }
  }

  bool Compatible(std::size_t j, const std::uint64_t* used) const {
    const std::uint64_t* m = masks_.data() + j * words_;
    for (std::size_t w = 0; w < words_; ++w) {
      if (m[w] & used[w]) return false;
    }
    return true;
  }

  void Mark(std::size_t j, std::uint64_t* used) const {
    const std::uint64_t* m = masks_.data() + j * words_;
    for (std::size_t w = 0; w < words_; ++w) used[w] |= m[w];
  }

  void Search(std::size_t from, std::vector<std::size_t>& current) {
    ++nodes_;
    if (current.size() > best_.size()) best_ = current;
    if (best_.size() >= need_) return;
    const std::uint64_t* used = scratch_.data() + current.size() * words_;
    std::size_t available = 0;
    for (std::size_t j = from; j < order_.size(); ++j) {
      available += Compatible(j, used) ? 1 : 0;
    }
    for (std::size_t j = from; j < order_.size(); ++j) {
      if (current.size() + available <= best_.size()) return;
      if (!Compatible(j, used)) continue;
      --available;
      std::uint64_t* next = scratch_.data() + (current.size() + 1) * words_;
      std::copy(used, used + words_, next);
      Mark(j, next);
      current.push_back(j);
      Search(j + 1, current);
      current.pop_back();
      if (best_.size() >= need_) return;
    }
  }

  std::span<const Path> paths_;
  std::vector<std::size_t> order_;
  std::vector<std::uint64_t> masks_;
  std::vector<std::uint64_t> scratch_;
  std::vector<std::size_t> best_;
  std::size_t words_ = 1;
  std::size_t need_ = 0;
  std::size_t nodes_ = 0;
};

inline PackingResult MaxDisjointPacking(std::span<const Path> paths,
                                        std::size_t target) {
  return DisjointPathPacker(paths).Solve(target);
}

}  // namespace rainbowk

#endif  // RAINBOWK_PACKING_HPP_
