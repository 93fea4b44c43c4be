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

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "oracles.hpp"
#include "rainbowk/coloring.hpp"
#include "rainbowk/gnp.hpp"
#include "rainbowk/rainbow.hpp"
#include "rainbowk/random_coloring.hpp"
#include "rainbowk/structure.hpp"

namespace rainbowk {
namespace {

std::vector<std::vector<Vertex>> VertexLists(const std::vector<Path>& paths) {
  std::vector<std::vector<Vertex>> out;
  for (const Path& p : paths) out.push_back(p.vertices);
  return out;
}

EdgeColoring Distinct(const Graph& g) {
  std::vector<Color> colors(g.num_edges());
  for (std::size_t i = 0; i < colors.size(); ++i) colors[i] = static_cast<Color>(i + 1);
  return EdgeColoring(g, g.num_edges(), colors);
}

TEST(ColoringTest, RejectsInvalidAssignments) {
  const Graph g = Graph::Path(3);
  EXPECT_THROW(EdgeColoring(g, 0, {}), std::invalid_argument);
  EXPECT_THROW(EdgeColoring(g, 2, {1}), std::invalid_argument);
  EXPECT_THROW(EdgeColoring(g, 2, {1, 3}), std::invalid_argument);
  EXPECT_THROW(EdgeColoring(g, 2, {0, 1}), std::invalid_argument);
}

TEST(ColoringTest, TextFormatRoundTrips) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Graph g = GenerateGnp(12, 0.4, Seed{s});
    const EdgeColoring col = RandomColoring(g, 1 + s % 4, Seed{s});
    std::ostringstream out;
    WriteColoring(out, g, col);
    std::istringstream in(out.str());
    EXPECT_EQ(ReadColoring(in, g), col);
  }
  std::ostringstream out;
  WriteColoring(out, Graph::Path(3), EdgeColoring(Graph::Path(3), 2, {2, 1}));
  EXPECT_EQ(out.str(), "2\n0 1 2\n1 2 1\n");
}

TEST(ColoringTest, ReadRejectsMismatches) {
  const Graph g = Graph::Path(3);
  for (const char* text : {"0\n0 1 1\n1 2 1\n", "2\n0 1 1\n", "2\n0 2 1\n1 2 1\n",
                           "2\n0 1 3\n1 2 1\n", "2\n0 1 1\n1 2 1\n5\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(ReadColoring(in, g), std::runtime_error) << text;
  }
}

TEST(EnumerateTest, MonochromaticTriangleKeepsOnlyDirectEdge) {
  const Graph g = Graph::Complete(3);
  const auto paths = EnumerateRainbowPaths(g, EdgeColoring::Uniform(g, 1, 1), 0, 1, 3);
  EXPECT_EQ(VertexLists(paths), (std::vector<std::vector<Vertex>>{{0, 1}}));
}

TEST(EnumerateTest, DistinctColoredTriangle) {
  const Graph g = Graph::Complete(3);  // edges {0,1}, {0,2}, {1,2}
  const EdgeColoring col(g, 3, {1, 3, 2});
  const auto paths = EnumerateRainbowPaths(g, col, 0, 2, 3);
  EXPECT_EQ(VertexLists(paths), (std::vector<std::vector<Vertex>>{{0, 2}, {0, 1, 2}}));
}

TEST(EnumerateTest, RepeatedColorOnOnlyPath) {
  const Graph g = Graph::Path(4);
  const EdgeColoring col(g, 2, {1, 2, 1});
  EXPECT_TRUE(EnumerateRainbowPaths(g, col, 0, 3, 5).empty());
}

TEST(EnumerateTest, RejectsBadArguments) {
  const Graph g = Graph::Complete(3);
  const EdgeColoring col = EdgeColoring::Uniform(g, 1, 1);
  EXPECT_THROW(EnumerateRainbowPaths(g, col, 1, 1, 3), std::invalid_argument);
  EXPECT_THROW(EnumerateRainbowPaths(g, col, 0, 1, 0), std::invalid_argument);
  EXPECT_THROW(MaxDisjointRainbowPaths(g, col, 2, 2, 1), std::invalid_argument);
}

TEST(EnumerateTest, MatchesBruteForceAndRespectsColorCount) {
  for (std::uint64_t s = 0; s < 150; ++s) {
    Rng rng(Seed{s});
    const std::size_t n = 3 + rng.Below(6);
    const Graph g = GenerateGnp(n, 0.3 + 0.6 * rng.Uniform01(), Seed{s});
    const std::size_t c = 1 + rng.Below(5);
    const EdgeColoring col = RandomColoring(g, c, Seed{s + 7});
    const std::size_t max_len = 1 + rng.Below(6);
    const auto u = static_cast<Vertex>(rng.Below(n));
    const auto v = static_cast<Vertex>((u + 1 + rng.Below(n - 1)) % n);
    auto expected = oracle::AllRainbowPaths(g, col, u, v, std::min(max_len, c));
    std::sort(expected.begin(), expected.end());
    const auto got = EnumerateRainbowPaths(g, col, u, v, max_len);
    EXPECT_EQ(got, expected) << "seed " << s;
    for (const Path& p : got) {
      EXPECT_LE(p.length(), c);
      EXPECT_TRUE(IsRainbow(g, col, p));
      EXPECT_FALSE(CheckPath(g, p, u, v).has_value());
    }
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
  }
}

TEST(PackingTest, Examples) {
  const Graph k3 = Graph::Complete(3);
  EXPECT_EQ(MaxDisjointRainbowPaths(k3, EdgeColoring::Uniform(k3, 1, 1), 0, 1, 2), 1);
  const Graph k4 = Graph::Complete(4);
  EXPECT_EQ(MaxDisjointRainbowPaths(k4, Distinct(k4), 0, 1, 3), 3);
  EXPECT_EQ(MaxDisjointRainbowPaths(k4, Distinct(k4), 0, 1, 2), 2);
  EXPECT_EQ(MaxDisjointRainbowPaths(k4, Distinct(k4), 0, 1, 10), 3);
}

TEST(PackingTest, GreedyTrapNeedsSearch) {
  // Greedy takes the first path, which blocks both of the others.
  const std::vector<Path> paths{{{0, 2, 3, 1}}, {{0, 2, 5, 1}}, {{0, 3, 6, 1}}};
  const PackingResult r = MaxDisjointPacking(paths, 10);
  EXPECT_EQ(r.count, 2);
  EXPECT_EQ(r.chosen, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(MaxDisjointPacking(paths, 1).count, 1);
  EXPECT_EQ(MaxDisjointPacking(paths, 0).count, 0);
}

TEST(PackingTest, DirectEdgeNeverConflicts) {
  const std::vector<Path> paths{{{0, 1}}, {{0, 2, 1}}, {{0, 2, 3, 1}}, {{0, 3, 1}}};
  EXPECT_EQ(MaxDisjointPacking(paths, 10).count, 3);
}

TEST(PackingTest, ExactAgainstSubsetEnumeration) {
  std::size_t checked = 0;
  for (std::uint64_t s = 0; checked < 150; ++s) {
    Rng rng(Seed{s * 31 + 5});
    const std::size_t n = 4 + rng.Below(7);
    const Graph g = GenerateGnp(n, 0.3 + 0.5 * rng.Uniform01(), Seed{s});
    const EdgeColoring col = RandomColoring(g, 2 + rng.Below(3), Seed{s});
    const auto paths = oracle::AllRainbowPaths(g, col, 0, 1, col.num_colors());
    if (paths.size() > 20) continue;
    ++checked;
    const std::size_t expected = oracle::SubsetPackingSize(paths);
    EXPECT_EQ(MaxDisjointRainbowPaths(g, col, 0, 1, 100), expected) << "seed " << s;
    for (std::size_t k = 1; k <= expected + 1; ++k) {
      EXPECT_EQ(MaxDisjointRainbowPaths(g, col, 0, 1, k), std::min(k, expected));
    }
  }
}

TEST(VerifyTest, CliqueIsRainbowConnectedUnderAnyColoring) {
  const Graph g = Graph::Complete(6);
  for (std::uint64_t s = 0; s < 10; ++s) {
    EXPECT_TRUE(IsRainbowKConnected(g, RandomColoring(g, 1 + s % 3, Seed{s}), 1));
  }
}

TEST(VerifyTest, MonochromaticTriangleFailsForTwoPaths) {
  const Graph g = Graph::Complete(3);
  const RainbowVerdict verdict = IsRainbowKConnected(g, EdgeColoring::Uniform(g, 1, 1), 2);
  EXPECT_FALSE(verdict);
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_EQ(*verdict.witness, (Edge{0, 1}));
  EXPECT_EQ(verdict.witness_paths, 1);
}

TEST(VerifyTest, WitnessIsLexicographicallyFirstFailingPair) {
  // Path 0-1-2-3 colored 1,2,1: only pair (0,3) lacks a rainbow path.
  const Graph g = Graph::Path(4);
  const RainbowVerdict verdict = IsRainbowKConnected(g, EdgeColoring(g, 2, {1, 2, 1}), 1);
  ASSERT_TRUE(verdict.witness.has_value());
  EXPECT_EQ(*verdict.witness, (Edge{0, 3}));
  EXPECT_EQ(verdict.witness_paths, 0);
}

TEST(VerifyTest, AgreesWithBruteForceVerifier) {
  for (std::uint64_t s = 0; s < 80; ++s) {
    Rng rng(Seed{s + 99});
    const std::size_t n = 3 + rng.Below(4);
    const Graph g = GenerateGnp(n, 0.5 + 0.5 * rng.Uniform01(), Seed{s});
    const EdgeColoring col = RandomColoring(g, 1 + rng.Below(4), Seed{s});
    for (std::size_t k = 1; k <= 3; ++k) {
      EXPECT_EQ(IsRainbowKConnected(g, col, k).connected,
                oracle::BruteRainbowKConnected(g, col, k))
          << "seed " << s << " k " << k;
    }
  }
}

TEST(RcValueTest, OrderingFiniteExceedsInfinite) {
  EXPECT_LT(RcValue::Finite(100), RcValue::Exceeds());
  EXPECT_LT(RcValue::Exceeds(), RcValue::Infinite());
  EXPECT_LT(RcValue::Finite(2), RcValue::Finite(3));
  EXPECT_EQ(RcValue::Infinite().ToString(), "INFINITE");
  EXPECT_THROW(RcValue::Exceeds().value(), std::logic_error);
}

TEST(RcExactTest, Examples) {
  EXPECT_EQ(RcKExact(Graph::Complete(4), 1, 6).value, RcValue::Finite(1));
  EXPECT_EQ(RcKExact(Graph::Path(4), 1, 6).value, RcValue::Finite(3));
  EXPECT_EQ(RcKExact(Graph::Cycle(5), 1, 5).value, RcValue::Finite(3));
  EXPECT_EQ(RcKExact(Graph::Path(3), 2, 5).value, RcValue::Infinite());
}

TEST(RcExactTest, CycleFiveMatchesExhaustiveColorings) {
  // Every coloring in [1..c]^5 for c = 1, 2, 3, without symmetry reduction.
  EXPECT_EQ(oracle::BruteRc(Graph::Cycle(5), 1, 4), 3);
  const RcResult r = RcKExact(Graph::Cycle(5), 1, 5);
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(IsRainbowKConnected(Graph::Cycle(5), *r.certificate, 1));
}

TEST(RcExactTest, ExceedsWhenColorCapTooLow) {
  EXPECT_EQ(RcKExact(Graph::Path(5), 1, 3).value, RcValue::Exceeds());
  EXPECT_EQ(RcKExact(Graph::Path(5), 1, 4).value, RcValue::Finite(4));
}

TEST(RcExactTest, RefusesGraphsOverEdgeBudget) {
  EXPECT_THROW(RcKExact(Graph::Complete(6), 2, 3), BudgetExceeded);
  EXPECT_THROW(RcKExact(Graph::Path(14), 1, 13), BudgetExceeded);
  EXPECT_NO_THROW(RcKExact(Graph::Path(14), 1, 3, 13));
}

TEST(RcExactTest, SearchFreeAnswersIgnoreBudget) {
  EXPECT_EQ(RcKExact(Graph::Complete(6), 1, 3).value, RcValue::Finite(1));
  EXPECT_EQ(RcKExact(Graph::Path(14), 2, 3).value, RcValue::Infinite());
  EXPECT_THROW(RcKExact(Graph::Path(4), 0, 3), std::invalid_argument);
}

TEST(RcExactTest, CanonicalSearchMatchesFullEnumeration) {
  // Graphs small enough for [1..c]^m with m <= 7 edges.
  std::size_t checked = 0;
  for (std::size_t n = 3; n <= 5; ++n) {
    for (const Graph& g : oracle::AllLabeledGraphs(n)) {
      if (g.num_edges() > 6 || !IsConnected(g)) continue;
      if (++checked % 7 != 0) continue;
      for (std::size_t k = 1; k <= 2; ++k) {
        const RcResult r = RcKExact(g, k, g.num_edges());
        const std::size_t brute = oracle::BruteRc(g, k, g.num_edges());
        if (brute == 0) {
          EXPECT_EQ(r.value, RcValue::Infinite());
        } else {
          EXPECT_EQ(r.value, RcValue::Finite(brute));
        }
      }
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(RcExactTest, CertificateIsAcceptedAndOneFewerColorIsNot) {
  for (std::size_t n = 3; n <= 4; ++n) {
    for (const Graph& g : oracle::AllLabeledGraphs(n)) {
      for (std::size_t k = 1; k <= 2; ++k) {
        const RcResult r = RcKExact(g, k, g.num_edges() + 1);
        if (!r.value.is_finite()) continue;
        ASSERT_TRUE(r.certificate.has_value());
        EXPECT_EQ(r.certificate->num_colors(), r.value.value());
        EXPECT_TRUE(oracle::BruteRainbowKConnected(g, *r.certificate, k));
        if (r.value.value() > 1) {
          EXPECT_EQ(oracle::BruteRc(g, k, r.value.value() - 1), 0);
        }
      }
    }
  }
}

TEST(RcExactTest, SmallGraphInvariants) {
  for (std::size_t n = 2; n <= 4; ++n) {
    for (const Graph& g : oracle::AllLabeledGraphs(n)) {
      const RcValue rc1 = RcKExact(g, 1, g.num_edges() + 1).value;
      const RcValue rc2 = RcKExact(g, 2, g.num_edges() + 1).value;
      const Distance diam = Diameter(g);
      if (diam.is_finite()) {
        ASSERT_TRUE(rc1.is_finite());
        EXPECT_GE(rc1.value(), diam.value());
      } else {
        EXPECT_EQ(rc1, RcValue::Infinite());
      }
      EXPECT_LE(rc1, rc2);
      EXPECT_EQ(rc1 == RcValue::Finite(1), g.is_complete());
      EXPECT_NE(rc2, RcValue::Finite(1));
    }
  }
}

}  // namespace
}  // namespace rainbowk
