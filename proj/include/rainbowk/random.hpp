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

#ifndef RAINBOWK_RANDOM_HPP_
#define RAINBOWK_RANDOM_HPP_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace rainbowk {

// Every randomized procedure in the library takes one of these. Identical
// seed and parameters give bit-identical results on every platform: only
// std::mt19937_64 (whose output sequence is fixed by the standard) and the
// helpers below are used, never the implementation-defined distributions.
struct Seed {
  std::uint64_t value = 0;

  friend constexpr bool operator==(Seed, Seed) = default;
};

constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seed derivation used by the experiment harness and the retry loops:
//   h_0     = SplitMix64(base)
//   h_{i+1} = SplitMix64(h_i ^ SplitMix64(word_i))
// The result is h_last. This function is part of the replay contract of
// recorded sweeps and must not change within a major version.
constexpr Seed DeriveSeed(Seed base, std::initializer_list<std::uint64_t> words) {
  std::uint64_t h = SplitMix64(base.value);
  for (std::uint64_t w : words) h = SplitMix64(h ^ SplitMix64(w));
  return Seed{h};
}

// Uniform value in [0, bound) from a 64-bit hash, by multiply-high.
// Bias is at most bound / 2^64.
inline std::uint64_t ScaleToRange(std::uint64_t bits, std::uint64_t bound) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(bits) * bound) >> 64);
}

class Rng {
 public:
  explicit Rng(Seed seed) : engine_(SplitMix64(seed.value)) {}

  std::uint64_t NextBits() { return engine_(); }

  // Uniform double in [0, 1) with 53 random bits.
  double Uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Unbiased uniform integer in [0, bound), bound > 0 (Lemire's method).
  std::uint64_t Below(std::uint64_t bound) {
    unsigned __int128 product =
        static_cast<unsigned __int128>(engine_()) * bound;
    auto low = static_cast<std::uint64_t>(product);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        product = static_cast<unsigned __int128>(engine_()) * bound;
        low = static_cast<std::uint64_t>(product);
      }
    }
    return static_cast<std::uint64_t>(product >> 64);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace rainbowk

#endif  // RAINBOWK_RANDOM_HPP_
