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

#ifndef RAINBOWK_THEORY_HPP_
#define RAINBOWK_THEORY_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Closed forms around the threshold p = (log n)^(1/d) / n^((d-1)/d) for
// rc_k(G(n,p)) <= d. "log" is base 2 throughout; only LowerProbe uses the
// natural logarithm. Sizes are doubles so that asymptotic regimes such as
// n = 2^80 can be evaluated.

namespace rainbowk::theory {

namespace detail {

inline void RequireSize(double n) {
  if (!(n >= 2)) throw std::invalid_argument("n must be at least 2");
}
inline void RequireDepth(int d) {
  if (d < 2) throw std::invalid_argument("d must be at least 2");
}

}  // namespace detail

inline double SharpThreshold(double n, int d) {
  detail::RequireSize(n);
  detail::RequireDepth(d);
  return std::pow(std::log2(n), 1.0 / d) / std::pow(n, (d - 1.0) / d);
}

// Below this edge probability G(n,p) almost surely has diameter > d, hence
// rc_k > d.
inline double LowerProbe(double n, int d) {
  detail::RequireSize(n);
  detail::RequireDepth(d);
  return std::pow(std::log(n), 1.0 / d) / std::pow(n, (d - 1.0) / d);
}

struct ThresholdParams {
  double n = 2;
  int d = 2;
  double k = 1;
  double c0 = 1;

  void Validate() const {
    detail::RequireSize(n);
    detail::RequireDepth(d);
    if (!(c0 >= 1)) throw std::invalid_argument("c0 must be at least 1");
    if (!(k >= 1)) throw std::invalid_argument("k must be positive");
  }
  // Upper-threshold multiplier C = 2^20 c0.
  double C() const { return std::ldexp(c0, 20); }
  // Disjoint-path constant c1 = 2^(10 d) c0.
  double c1() const { return std::ldexp(c0, 10 * d); }
  // k <= c0 log2 n, the regime the bounds are stated for.
  bool k_in_regime() const { return k <= c0 * std::log2(n); }
};

struct Probe {
  double p = 0;
  // p > 1: the constant makes the bound vacuous at this n.
  bool exceeds_one = false;
};

inline Probe UpperProbe(const ThresholdParams& params) {
  params.Validate();
  const double p = params.C() * SharpThreshold(params.n, params.d);
  return Probe{p, p > 1.0};
}

// Probability d!/d^d that a fixed length-d path comes out rainbow under a
// uniform random d-coloring.
inline double RainbowProbability(int d) {
  if (d < 1) throw std::invalid_argument("d must be positive");
  double q = 1.0;
  for (int i = 1; i <= d; ++i) q *= static_cast<double>(i) / d;
  return q;
}

inline double BinaryEntropy(double eps) {
  if (!(eps > 0.0 && eps < 1.0)) {
    throw std::invalid_argument("binary entropy needs eps in (0, 1)");
  }
  // log1p keeps the (1 - eps) term accurate for tiny eps.
  return -eps * std::log2(eps) - (1.0 - eps) * std::log1p(-eps) / std::log(2.0);
}

// 4^(-d) (c1 - c0) - c1 H(c0 / c1): the exponent e in the n^(-e) bound on
// one pair getting fewer than k rainbow paths under a random d-coloring.
inline double FailureExponent(int d, double c0) {
  detail::RequireDepth(d);
  if (!(c0 >= 1)) throw std::invalid_argument("c0 must be at least 1");
  const double c1 = std::ldexp(c0, 10 * d);
  return std::ldexp(c1 - c0, -2 * d) - c1 * BinaryEntropy(c0 / c1);
}

// c1 log2 n = 2^(10 d) c0 log2 n disjoint length-d paths per pair.
inline double GuaranteedDisjointPaths(double n, int d, double c0) {
  detail::RequireSize(n);
  detail::RequireDepth(d);
  return std::ldexp(c0, 10 * d) * std::log2(n);
}

// The unique d >= 2 with (d-2)/(d-1) <= eps < (d-1)/d.
inline std::uint64_t ChooseDepthFromEpsilon(double eps) {
  if (!(eps >= 0.0 && eps < 1.0)) {
    throw std::invalid_argument("eps must lie in [0, 1)");
  }
  const double x = std::min(1.0 / (1.0 - eps), 0x1.0p53);
  auto d = static_cast<std::uint64_t>(std::floor(x)) + 1;
  const auto upper = [](std::uint64_t t) {
    return static_cast<double>(t - 1) / static_cast<double>(t);
  };
  const auto lower = [](std::uint64_t t) {
    return static_cast<double>(t - 2) / static_cast<double>(t - 1);
  };
  while (upper(d) <= eps) ++d;
  while (d > 2 && lower(d) > eps) --d;
  return std::max<std::uint64_t>(d, 2);
}

struct TableRow {
  std::string name;
  double value = 0;
  std::string note;
};

// The labeled quantities printed by `rainbowk theory`.
inline std::vector<TableRow> TheoryTable(const ThresholdParams& params) {
  params.Validate();
  const Probe upper = UpperProbe(params);
  std::vector<TableRow> rows;
  rows.push_back({"sharp_threshold", SharpThreshold(params.n, params.d),
                  "(log2 n)^(1/d) / n^((d-1)/d)"});
  rows.push_back({"lower_probe", LowerProbe(params.n, params.d),
                  "(ln n)^(1/d) / n^((d-1)/d)"});
  rows.push_back({"upper_probe", upper.p,
                  upper.exceeds_one ? "C * sharp_threshold; exceeds 1, vacuous at this n"
                                    : "C * sharp_threshold"});
  rows.push_back({"C", params.C(), "2^20 * c0"});
  rows.push_back({"c1", params.c1(), "2^(10d) * c0"});
  rows.push_back({"rainbow_prob", RainbowProbability(params.d), "d! / d^d"});
  rows.push_back({"rainbow_prob_floor", std::ldexp(1.0, -2 * params.d), "4^(-d)"});
  rows.push_back({"failure_exponent", FailureExponent(params.d, params.c0),
                  "4^(-d)(c1 - c0) - c1 H(c0/c1)"});
  rows.push_back({"guaranteed_disjoint_paths",
                  GuaranteedDisjointPaths(params.n, params.d, params.c0),
                  "c1 * log2 n"});
  rows.push_back({"k_max", params.c0 * std::log2(params.n),
                  params.k_in_regime() ? "c0 * log2 n; k within regime"
                                       : "c0 * log2 n; k exceeds regime"});
  return rows;
}

}  // namespace rainbowk::theory

#endif  // RAINBOWK_THEORY_HPP_
