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

#include "rainbowk/random_coloring.hpp"

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rainbowk/gnp.hpp"
#include "rainbowk/theory.hpp"

namespace rainbowk {
namespace {

// |hits - trials * q| within five binomial standard deviations.
void ExpectBinomial(std::size_t hits, std::size_t trials, double q) {
  const double mean = static_cast<double>(trials) * q;
  const double sigma = std::sqrt(static_cast<double>(trials) * q * (1 - q));
  EXPECT_LE(std::abs(static_cast<double>(hits) - mean), 5 * sigma)
      << hits << " of " << trials;
}

ColoringOptions Attempts(std::size_t attempts) {
  ColoringOptions options;
  options.attempts = attempts;
  return options;
}

TEST(RandomColoringTest, OneColorIsConstant) {
  const Graph g = GenerateGnp(40, 0.3, Seed{2});
  const EdgeColoring col = RandomColoring(g, 1, Seed{9});
  for (Color c : col.colors()) EXPECT_EQ(c, 1);
}

TEST(RandomColoringTest, ColorsInRangeAndDeterministic) {
  const Graph g = GenerateGnp(60, 0.2, Seed{3});
  const EdgeColoring a = RandomColoring(g, 5, Seed{11});
  EXPECT_EQ(a, RandomColoring(g, 5, Seed{11}));
  EXPECT_NE(a, RandomColoring(g, 5, Seed{12}));
  for (Color c : a.colors()) {
    EXPECT_GE(c, 1);
    EXPECT_LE(c, 5);
  }
}

TEST(RandomColoringTest, ZeroColorsRejected) {
  EXPECT_THROW(RandomColoring(Graph::Path(3), 0, Seed{1}), std::invalid_argument);
}

TEST(RandomColoringTest, TwoColorFrequencyOnCompleteGraph) {
  const Graph g = Graph::Complete(100);
  std::size_t ones = 0;
  std::size_t total = 0;
  for (std::uint64_t s = 0; s < 10; ++s) {
    for (Color c : RandomColoring(g, 2, Seed{s}).colors()) {
      ones += c == 1;
      ++total;
    }
  }
  ExpectBinomial(ones, total, 0.5);
}

TEST(RandomColoringTest, PerEdgeFrequencyAcrossSeeds) {
  const Graph g = Graph::Complete(100);
  const EdgeId probe = *g.edge_id(17, 83);
  std::size_t ones = 0;
  constexpr std::size_t kSeeds = 4000;
  for (std::uint64_t s = 0; s < kSeeds; ++s) {
    ones += RandomColoring(g, 2, Seed{s})[probe] == 1;
  }
  ExpectBinomial(ones, kSeeds, 0.5);
}

TEST(RandomColoringTest, LengthTwoRainbowFrequencyMatchesTheory) {
  const Graph g = Graph::Path(3);
  std::size_t rainbow = 0;
  constexpr std::size_t kSeeds = 20000;
  for (std::uint64_t s = 0; s < kSeeds; ++s) {
    const EdgeColoring col = RandomColoring(g, 2, Seed{s});
    rainbow += col[0] != col[1];
  }
  ExpectBinomial(rainbow, kSeeds, theory::RainbowProbability(2));
}

TEST(RandomColoringTest, SingleEdgeAlwaysRainbow) {
  const Graph g(2, {{0, 1}});
  for (std::uint64_t s = 0; s < 20; ++s) {
    EXPECT_TRUE(IsRainbowKConnected(g, RandomColoring(g, 3, Seed{s}), 1).connected);
  }
}

TEST(RandomColoringTest, NestedGraphsAgreeOnSharedEdges) {
  const Graph small = GenerateGnp(80, 0.1, Seed{5});
  const Graph big = GenerateGnp(80, 0.3, Seed{5});
  const EdgeColoring a = RandomColoring(small, 4, Seed{21});
  const EdgeColoring b = RandomColoring(big, 4, Seed{21});
  for (EdgeId id = 0; id < small.num_edges(); ++id) {
    const Edge e = small.edge(id);
    ASSERT_TRUE(big.has_edge(e.u, e.v));
    EXPECT_EQ(a[id], b[*big.edge_id(e.u, e.v)]);
  }
}

TEST(DensityExponentTest, Clamping) {
  EXPECT_DOUBLE_EQ(DensityExponent(1.0, 100), 0.0);
  EXPECT_NEAR(DensityExponent(0.1, 100), 0.5, 1e-12);
  EXPECT_LT(DensityExponent(1e-9, 100), 1.0);
  EXPECT_LT(DensityExponent(0.0, 100), 1.0);
}

TEST(RainbowKColorTest, CliqueNeedsOneColor) {
  const ColoringResult r = RainbowKColor(Graph::Complete(5), 1, Seed{1});
  const auto* ok = std::get_if<ColoringSuccess>(&r);
  ASSERT_NE(ok, nullptr);
  EXPECT_EQ(ok->colors_used, 1);
  for (Color c : ok->coloring.colors()) EXPECT_EQ(c, 1);
}

TEST(RainbowKColorTest, CutVertexIsInfinite) {
  const ColoringResult r = RainbowKColor(Graph::Path(3), 2, Seed{1});
  const auto* inf = std::get_if<NotKConnected>(&r);
  ASSERT_NE(inf, nullptr);
  EXPECT_EQ(inf->k, 2);
}

TEST(RainbowKColorTest, CompleteGraphWithTwoDisjointPaths) {
  // K_5 with k = 2 is not a single-color case; two colors always suffice
  // somewhere in the retries.
  const Graph g = Graph::Complete(5);
  const ColoringResult r = RainbowKColor(g, 2, Seed{4});
  const auto* ok = std::get_if<ColoringSuccess>(&r);
  ASSERT_NE(ok, nullptr);
  EXPECT_TRUE(oracle::BruteRainbowKConnected(g, ok->coloring, 2));
}

TEST(RainbowKColorTest, LongPathFailsWithWitness) {
  // A path on 6 vertices has density exponent below 1/2 in n, so the chosen
  // depth is far below its diameter and every attempt fails.
  const Graph g = Graph::Path(6);
  const ColoringResult r = RainbowKColor(g, 1, Seed{3}, Attempts(4));
  const auto* fail = std::get_if<ColoringFailure>(&r);
  ASSERT_NE(fail, nullptr);
  EXPECT_EQ(fail->attempts, 8);
  EXPECT_EQ(fail->witness_paths, 0);
  EXPECT_LT(fail->witness.u, fail->witness.v);
}

TEST(RainbowKColorTest, DenseGraphUsesTwoColorsMostly) {
  const double p = 4 * theory::SharpThreshold(300, 2);
  std::size_t two = 0;
  constexpr std::size_t kRuns = 10;
  for (std::uint64_t s = 0; s < kRuns; ++s) {
    const Graph g = GenerateGnp(300, p, Seed{s});
    const ColoringResult r = RainbowKColor(g, 1, Seed{s + 1000}, Attempts(20));
    if (const auto* ok = std::get_if<ColoringSuccess>(&r)) {
      EXPECT_TRUE(IsRainbowKConnected(g, ok->coloring, 1).connected);
      EXPECT_EQ(ok->depth, 2);
      two += ok->colors_used == 2;
    }
  }
  EXPECT_GE(two, kRuns * 7 / 10);
}

TEST(RainbowKColorTest, DeterministicPerSeed) {
  const Graph g = GenerateGnp(120, 0.3, Seed{8});
  const ColoringResult a = RainbowKColor(g, 2, Seed{77});
  const ColoringResult b = RainbowKColor(g, 2, Seed{77});
  ASSERT_EQ(a.index(), b.index());
  if (const auto* ok = std::get_if<ColoringSuccess>(&a)) {
    EXPECT_EQ(ok->coloring, std::get<ColoringSuccess>(b).coloring);
  }
}

TEST(RainbowKColorTest, SmallGraphsAgreeWithBruteForce) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const Graph g = GenerateGnp(7, 0.6, Seed{s});
    for (std::size_t k = 1; k <= 2; ++k) {
      const ColoringResult r = RainbowKColor(g, k, Seed{s});
      if (std::holds_alternative<NotKConnected>(r)) {
        EXPECT_FALSE(oracle::BruteKConnected(g, k));
      } else if (const auto* ok = std::get_if<ColoringSuccess>(&r)) {
        EXPECT_TRUE(oracle::BruteKConnected(g, k));
        EXPECT_TRUE(oracle::BruteRainbowKConnected(g, ok->coloring, k));
      }
    }
  }
}

TEST(RainbowKColorTest, RejectsBadOptions) {
  const Graph g = Graph::Complete(4);
  EXPECT_THROW(RainbowKColor(g, 0, Seed{1}), std::invalid_argument);
  EXPECT_THROW(RainbowKColor(g, 1, Seed{1}, Attempts(0)), std::invalid_argument);
  EXPECT_THROW(RainbowKColor(g, 1, Seed{1}, ColoringOptions{16, 1.5}), std::invalid_argument);
}

}  // namespace
}  // namespace rainbowk
