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

#ifndef RAINBOWK_EXPERIMENTS_HPP_
#define RAINBOWK_EXPERIMENTS_HPP_

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <variant>
#include <vector>

#include "json.hpp"
#include "rainbowk/gnp.hpp"
#include "rainbowk/graph.hpp"
#include "rainbowk/growth.hpp"
#include "rainbowk/rainbow.hpp"
#include "rainbowk/random.hpp"
#include "rainbowk/random_coloring.hpp"
#include "rainbowk/structure.hpp"
#include "rainbowk/theory.hpp"

namespace rainbowk {

enum class SweepMode {
  kColoring,  // a uniform random d-coloring is rainbow-k-connected
  kDiameter,  // diameter <= d
  kGrowth,    // tree growth yields a packing for a random pair
};

inline std::string ToString(SweepMode mode) {
  switch (mode) {
    case SweepMode::kColoring:
      return "coloring";
    case SweepMode::kDiameter:
      return "diameter";
    case SweepMode::kGrowth:
      return "growth";
  }
  return "";
}

inline SweepMode ParseSweepMode(const std::string& text) {
  std::string lower = text;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "coloring") return SweepMode::kColoring;
  if (lower == "diameter") return SweepMode::kDiameter;
  if (lower == "growth") return SweepMode::kGrowth;
  throw std::invalid_argument("unknown sweep mode '" + text + "'");
}

inline std::vector<double> DefaultMultipliers() {
  return {0.125, 0.25, 0.5, 1.0, 2.0, 4.0, 8.0};
}

// One grid of G(n, p) experiments with p = multiplier * SharpThreshold(n, d).
struct SweepConfig {
  std::vector<std::size_t> n_values;
  std::vector<double> multipliers = DefaultMultipliers();
  std::size_t d = 2;
  std::size_t k = 1;
  std::size_t trials = 10;
  Seed seed{1};
  SweepMode mode = SweepMode::kColoring;
  // Trials of one n share their graph seed across multipliers, so the graph
  // at a larger multiplier contains the one at a smaller multiplier.
  bool coupled = true;
  // COLORING cells whose estimated verification work exceeds this are
  // reported as skipped.
  double cost_budget = 1e10;
  // GROWTH branching; DefaultBranching(g) when unset.
  std::optional<std::size_t> branching;

  void Validate() const {
    if (n_values.empty()) throw std::invalid_argument("sweep needs at least one n");
    for (std::size_t n : n_values) {
      if (n < 2) throw std::invalid_argument("sweep sizes must be at least 2");
    }
    if (multipliers.empty()) {
      throw std::invalid_argument("sweep needs at least one multiplier");
    }
    for (double m : multipliers) {
      if (!(m >= 0) || !std::isfinite(m)) {
        throw std::invalid_argument("multipliers must be finite and non-negative");
      }
    }
    if (d < 2) throw std::invalid_argument("sweep depth d must be at least 2");
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    if (branching && *branching < 1) {
      throw std::invalid_argument("branching must be positive");
    }
  }

  // Non-fatal issues: k above floor(log2 n) leaves the k <= c0 log n regime
  // (c0 = 1).
  std::vector<std::string> Warnings() const {
    std::vector<std::string> out;
    for (std::size_t n : n_values) {
      const auto limit = static_cast<std::size_t>(std::floor(std::log2(n)));
      if (k > limit) {
        out.push_back("k = " + std::to_string(k) + " exceeds floor(log2 " +
                      std::to_string(n) + ") = " + std::to_string(limit));
      }
    }
    return out;
  }
};

struct SweepRecord {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t k = 0;
  double multiplier = 0;
  double p = 0;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double success_rate = 0;
  // COLORING: mean edge count. DIAMETER: mean diameter over connected
  // trials. GROWTH: mean packing size over trials whose tree completed.
  // 0 when no trial contributes.
  double aux_mean = 0;
  bool clamped = false;
  bool skipped = false;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

// Seed of trial `trial` in cell (n, multiplier_index):
//   coupled:   DeriveSeed(master, {n, 0, trial})
//   uncoupled: DeriveSeed(master, {n, multiplier_index + 1, trial})
// The graph uses this seed; the coloring, pair choice and growth sampling
// use DeriveSeed(trial_seed, {1}), {2} and {3}.
inline Seed TrialSeed(const SweepConfig& config, std::size_t n,
                      std::size_t multiplier_index, std::size_t trial) {
  const std::uint64_t slot = config.coupled ? 0 : multiplier_index + 1;
  return DeriveSeed(config.seed, {n, slot, trial});
}

struct CellProbability {
  double p = 0;
  bool clamped = false;
};

inline CellProbability CellP(std::size_t n, std::size_t d, double multiplier) {
  const double raw =
      multiplier * theory::SharpThreshold(static_cast<double>(n), static_cast<int>(d));
  return raw > 1.0 ? CellProbability{1.0, true} : CellProbability{raw, false};
}

// Pairs times the expected number of walks of length <= c between a pair,
// an upper estimate of the rainbow paths the verifier may enumerate.
inline double EstimatedVerificationCost(std::size_t n, double p, std::size_t c) {
  const double pairs = static_cast<double>(n) * (n - 1) / 2;
  double per_pair = 0;
  double walks = p;
  for (std::size_t len = 1; len <= c; ++len) {
    per_pair += walks;
    walks *= static_cast<double>(n - 2) * p;
  }
  return pairs * per_pair;
}

struct TrialOutcome {
  bool success = false;
  // Contribution to aux_mean; nullopt when the trial does not contribute.
  std::optional<double> aux;

  friend bool operator==(const TrialOutcome&, const TrialOutcome&) = default;
};

// Runs one trial in isolation; RunSweep aggregates exactly these outcomes,
// so any recorded trial can be replayed with this call.
inline TrialOutcome RunTrial(const SweepConfig& config, std::size_t n,
                             std::size_t multiplier_index, std::size_t trial) {
  const CellProbability cell = CellP(n, config.d, config.multipliers.at(multiplier_index));
  const Seed seed = TrialSeed(config, n, multiplier_index, trial);
  const Graph g = GenerateGnp(n, cell.p, seed);
  switch (config.mode) {
    case SweepMode::kColoring: {
      const EdgeColoring col = RandomColoring(g, config.d, DeriveSeed(seed, {1}));
      return {IsRainbowKConnected(g, col, config.k).connected,
              static_cast<double>(g.num_edges())};
    }
    case SweepMode::kDiameter: {
      const Distance diam = Diameter(g);
      if (diam.is_infinite()) return {false, std::nullopt};
      return {diam.value() <= config.d, static_cast<double>(diam.value())};
    }
    case SweepMode::kGrowth: {
      Rng pick(DeriveSeed(seed, {2}));
      const auto u = static_cast<Vertex>(pick.Below(n));
      auto v = static_cast<Vertex>(pick.Below(n - 1));
      if (v >= u) ++v;
      const std::size_t b = config.branching.value_or(DefaultBranching(g));
      const GrowthResult result =
          GrowDisjointPaths(g, u, v, config.d, b, DeriveSeed(seed, {3}));
      const auto* grown = std::get_if<GrownPaths>(&result);
      if (grown == nullptr) return {false, std::nullopt};
      if (auto err = CheckPacking(g, grown->packing, config.d)) {
        throw std::logic_error("growth produced an invalid packing: " + *err);
      }
      // A completed tree with no leaf next to v yields no path: not a success,
      // but its zero still counts toward the mean packing size.
      return {grown->packing.size() > 0, static_cast<double>(grown->packing.size())};
    }
  }
  return {};
}

// Every (n, multiplier) cell in n-major order. Sequential, hence
// bit-reproducible for a fixed config.
inline std::vector<SweepRecord> RunSweep(const SweepConfig& config) {
  config.Validate();
  std::vector<SweepRecord> records;
  for (std::size_t n : config.n_values) {
    for (std::size_t mi = 0; mi < config.multipliers.size(); ++mi) {
      const CellProbability cell = CellP(n, config.d, config.multipliers[mi]);
      SweepRecord rec;
      rec.n = n;
      rec.d = config.d;
      rec.k = config.k;
      rec.multiplier = config.multipliers[mi];
      rec.p = cell.p;
      rec.trials = config.trials;
      rec.clamped = cell.clamped;
      if (config.mode == SweepMode::kColoring &&
          EstimatedVerificationCost(n, cell.p, config.d) > config.cost_budget) {
        rec.skipped = true;
        records.push_back(rec);
        continue;
      }
      double aux_sum = 0;
      std::size_t aux_count = 0;
      for (std::size_t t = 0; t < config.trials; ++t) {
        const TrialOutcome outcome = RunTrial(config, n, mi, t);
        rec.successes += outcome.success ? 1 : 0;
        if (outcome.aux) {
          aux_sum += *outcome.aux;
          ++aux_count;
        }
      }
      rec.success_rate = static_cast<double>(rec.successes) / rec.trials;
      rec.aux_mean = aux_count ? aux_sum / aux_count : 0.0;
      records.push_back(rec);
    }
  }
  return records;
}

inline std::vector<SweepRecord> RunThresholdSweep(const SweepConfig& config) {
  if (config.mode == SweepMode::kGrowth) {
    throw std::invalid_argument("threshold sweep needs COLORING or DIAMETER mode");
  }
  return RunSweep(config);
}

inline std::vector<SweepRecord> RunGrowthCensus(const SweepConfig& config) {
  if (config.mode != SweepMode::kGrowth) {
    throw std::invalid_argument("growth census needs GROWTH mode");
  }
  return RunSweep(config);
}

// ---------------------------------------------------------------------------
// Output.

enum class OutputFormat { kCsv, kJson };

inline OutputFormat ParseOutputFormat(const std::string& text) {
  if (text == "csv" || text == "CSV") return OutputFormat::kCsv;
  if (text == "json" || text == "JSON") return OutputFormat::kJson;
  throw std::invalid_argument("unknown output format '" + text + "'");
}

inline constexpr const char* kCsvHeader =
    "n,d,k,multiplier,p,trials,successes,success_rate,aux_mean,clamped,skipped";

// Six significant digits.
inline std::string FormatReal(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

inline double RoundReal(double x) { return std::stod(FormatReal(x)); }

inline void EmitCsv(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << kCsvHeader << '\n';
  for (const SweepRecord& r : records) {
    out << r.n << ',' << r.d << ',' << r.k << ',' << FormatReal(r.multiplier) << ','
        << FormatReal(r.p) << ',' << r.trials << ',' << r.successes << ','
        << FormatReal(r.success_rate) << ',' << FormatReal(r.aux_mean) << ','
        << (r.clamped ? "true" : "false") << ',' << (r.skipped ? "true" : "false")
        << '\n';
  }
}

inline nlohmann::ordered_json ToJson(const std::vector<SweepRecord>& records) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    nlohmann::ordered_json o;
    o["n"] = r.n;
    o["d"] = r.d;
    o["k"] = r.k;
    o["multiplier"] = RoundReal(r.multiplier);
    o["p"] = RoundReal(r.p);
    o["trials"] = r.trials;
    o["successes"] = r.successes;
    o["success_rate"] = RoundReal(r.success_rate);
    o["aux_mean"] = RoundReal(r.aux_mean);
    o["clamped"] = r.clamped;
    o["skipped"] = r.skipped;
    arr.push_back(std::move(o));
  }
  return arr;
}

inline void EmitJson(std::ostream& out, const std::vector<SweepRecord>& records) {
  out << ToJson(records).dump(2) << '\n';
}

inline void Emit(std::ostream& out, const std::vector<SweepRecord>& records,
                 OutputFormat format) {
  if (format == OutputFormat::kCsv) {
    EmitCsv(out, records);
  } else {
    EmitJson(out, records);
  }
}

inline std::vector<SweepRecord> ParseRecordsJson(const std::string& text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::runtime_error("sweep json: expected an array");
  std::vector<SweepRecord> out;
  for (const auto& o : arr) {
    SweepRecord r;
    r.n = o.at("n").get<std::size_t>();
    r.d = o.at("d").get<std::size_t>();
    r.k = o.at("k").get<std::size_t>();
    r.multiplier = o.at("multiplier").get<double>();
    r.p = o.at("p").get<double>();
    r.trials = o.at("trials").get<std::size_t>();
    r.successes = o.at("successes").get<std::size_t>();
    r.success_rate = o.at("success_rate").get<double>();
    r.aux_mean = o.at("aux_mean").get<double>();
    r.clamped = o.at("clamped").get<bool>();
    r.skipped = o.at("skipped").get<bool>();
    out.push_back(r);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Config files: flat "key = value" lines, '#' starts a comment. Lists are
// comma-separated.
//
//   n = 1000
//   multipliers = 0.125, 0.25, 0.5, 1, 2, 4, 8
//   d = 2
//   k = 1
//   trials = 200
//   seed = 42
//   mode = coloring          # coloring | diameter | growth
//   coupled = true
//   budget = 1e10
//   branching = 5            # growth only
//   format = csv             # csv | json
//   output = sweep.csv

struct SweepFile {
  SweepConfig config;
  std::optional<OutputFormat> format;
  std::optional<std::string> output;
};

namespace detail {

inline std::string Trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

inline std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline std::uint64_t ParseUnsigned(const std::string& key, const std::string& value) {
  std::uint64_t x = 0;
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, x);
  if (value.empty() || ec != std::errc() || ptr != end) {
    throw std::invalid_argument("config: '" + key + "' needs a non-negative integer");
  }
  return x;
}

inline std::size_t ParseCount(const std::string& key, const std::string& value) {
  return static_cast<std::size_t>(ParseUnsigned(key, value));
}

inline double ParseReal(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double x = 0;
  try {
    x = std::stod(value, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != value.size()) {
    throw std::invalid_argument("config: '" + key + "' needs a number");
  }
  return x;
}

inline bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw std::invalid_argument("config: '" + key + "' needs true or false");
}

}  // namespace detail

// Applies one key/value pair; shared by config files and CLI overrides.
inline void ApplySweepSetting(SweepFile& file, const std::string& key,
                              const std::string& value) {
  SweepConfig& c = file.config;
  if (key == "n" || key == "n_values") {
    c.n_values.clear();
    for (const auto& item : detail::SplitList(value)) {
      c.n_values.push_back(detail::ParseCount(key, item));
    }
  } else if (key == "multipliers") {
    c.multipliers.clear();
    for (const auto& item : detail::SplitList(value)) {
      c.multipliers.push_back(detail::ParseReal(key, item));
    }
  } else if (key == "d") {
    c.d = detail::ParseCount(key, value);
  } else if (key == "k") {
    c.k = detail::ParseCount(key, value);
  } else if (key == "trials") {
    c.trials = detail::ParseCount(key, value);
  } else if (key == "seed") {
    c.seed = Seed{detail::ParseUnsigned(key, value)};
  } else if (key == "mode") {
    c.mode = ParseSweepMode(value);
  } else if (key == "coupled") {
    c.coupled = detail::ParseBool(key, value);
  } else if (key == "budget") {
    c.cost_budget = detail::ParseReal(key, value);
  } else if (key == "branching") {
    c.branching = detail::ParseCount(key, value);
  } else if (key == "format") {
    file.format = ParseOutputFormat(value);
  } else if (key == "output") {
    file.output = value;
  } else {
    throw std::invalid_argument("config: unknown key '" + key + "'");
  }
}

inline SweepFile ParseSweepFile(std::istream& in) {
  SweepFile file;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      line.resize(hash);
    }
    line = detail::Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": expected key = value");
    }
    ApplySweepSetting(file, detail::Trim(line.substr(0, eq)),
                      detail::Trim(line.substr(eq + 1)));
  }
  return file;
}

}  // namespace rainbowk

#endif  // RAINBOWK_EXPERIMENTS_HPP_
