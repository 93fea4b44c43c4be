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


// rainbowk: command-line front end.
//
// Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or input
// error, 3 refused by a budget.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "rainbowk.hpp"

namespace rainbowk {
namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kRefused = 3;

// Reads a whole file, or stdin for "-".
std::string Slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Graph LoadGraph(const std::string& path) {
  std::istringstream in(Slurp(path));
  return ReadEdgeList(in);
}

EdgeColoring LoadColoring(const std::string& path, const Graph& g) {
  std::istringstream in(Slurp(path));
  return ReadColoring(in, g);
}

// Writes `text` to `path`, or stdout when empty.
void Deliver(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out.flush()) throw std::runtime_error("write to '" + path + "' failed");
}

Vertex CheckedVertex(const Graph& g, std::uint64_t x, const char* name) {
  if (x >= g.num_vertices()) {
    throw std::invalid_argument(std::string(name) + " = " + std::to_string(x) +
                                " is not a vertex");
  }
  return static_cast<Vertex>(x);
}

struct GenArgs {
  std::size_t n = 0;
  double p = 0;
  std::uint64_t seed = 1;
  std::string out;
};

int RunGen(const GenArgs& a) {
  std::ostringstream text;
  WriteEdgeList(text, GenerateGnp(a.n, a.p, Seed{a.seed}));
  Deliver(a.out, text.str());
  return kTrue;
}

struct ColorArgs {
  std::string graph;
  std::size_t colors = 0;
  std::size_t k = 0;
  std::size_t attempts = 16;
  std::optional<double> known_p;
  std::uint64_t seed = 1;
  std::string out;
};

int RunColor(const ColorArgs& a) {
  const Graph g = LoadGraph(a.graph);
  std::ostringstream text;
  if (a.k == 0) {
    if (a.colors == 0) throw std::invalid_argument("color needs --colors or --k");
    WriteColoring(text, g, RandomColoring(g, a.colors, Seed{a.seed}));
    Deliver(a.out, text.str());
    return kTrue;
  }
  ColoringOptions options;
  options.attempts = a.attempts;
  options.known_p = a.known_p;
  const ColoringResult r = RainbowKColor(g, a.k, Seed{a.seed}, options);
  if (const auto* ok = std::get_if<ColoringSuccess>(&r)) {
    std::cerr << "colors " << ok->colors_used << " depth " << ok->depth << " epsilon "
              << ok->epsilon << " attempts " << ok->attempts_used
              << (ok->escalated ? " escalated" : "") << " claimed_lower_bound "
              << ok->claimed_lower_bound << '\n';
    WriteColoring(text, g, ok->coloring);
    Deliver(a.out, text.str());
    return kTrue;
  }
  if (const auto* inf = std::get_if<NotKConnected>(&r)) {
    std::cerr << "rc_" << inf->k << " = INFINITE: graph is not " << inf->k
              << "-vertex-connected\n";
    return kFalse;
  }
  const auto& fail = std::get<ColoringFailure>(r);
  std::cerr << "no coloring found after " << fail.attempts << " attempts (last with "
            << fail.last_colors << " colors); witness " << fail.witness.u << ' '
            << fail.witness.v << " has " << fail.witness_paths
            << " disjoint rainbow paths\n";
  return kFalse;
}

struct VerifyArgs {
  std::string graph;
  std::string coloring;
  std::size_t k = 1;
};

int RunVerify(const VerifyArgs& a) {
  const Graph g = LoadGraph(a.graph);
  const EdgeColoring col = LoadColoring(a.coloring, g);
  const RainbowVerdict v = IsRainbowKConnected(g, col, a.k);
  if (v.connected) {
    std::cout << "true\n";
    return kTrue;
  }
  std::cout << "false\nwitness " << v.witness->u << ' ' << v.witness->v << " paths "
            << v.witness_paths << '\n';
  return kFalse;
}

struct RckArgs {
  std::string graph;
  std::size_t k = 1;
  std::optional<std::size_t> max_colors;
  std::size_t edge_budget = kDefaultRcEdgeBudget;
  std::string certificate;
};

int RunRck(const RckArgs& a) {
  const Graph g = LoadGraph(a.graph);
  const std::size_t cap = a.max_colors.value_or(std::max<std::size_t>(1, g.num_edges()));
  const RcResult r = RcKExact(g, a.k, cap, a.edge_budget);
  std::cout << r.value.ToString() << '\n';
  if (r.certificate && !a.certificate.empty()) {
    std::ostringstream text;
    WriteColoring(text, g, *r.certificate);
    Deliver(a.certificate, text.str());
  }
  return kTrue;
}

struct GrowArgs {
  std::string graph;
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  std::size_t d = 2;
  std::optional<std::size_t> branching;
  std::uint64_t seed = 1;
  bool lowest_index = false;
  std::string out;
};

int RunGrow(const GrowArgs& a) {
  const Graph g = LoadGraph(a.graph);
  const Vertex u = CheckedVertex(g, a.u, "u");
  const Vertex v = CheckedVertex(g, a.v, "v");
  const std::size_t b = a.branching.value_or(DefaultBranching(g));
  const GrowthResult r =
      GrowDisjointPaths(g, u, v, a.d, b, Seed{a.seed},
                        a.lowest_index ? NeighborOrder::kLowestIndex : NeighborOrder::kSampled);
  if (const auto* f = std::get_if<GrowthFailure>(&r)) {
    std::cerr << "growth failed at level " << f->level << ": vertex " << f->vertex
              << " has " << f->eligible << " eligible neighbors, needs " << f->needed
              << '\n';
    return kFalse;
  }
  std::ostringstream text;
  WritePathPacking(text, std::get<GrownPaths>(r).packing);
  Deliver(a.out, text.str());
  return kTrue;
}

struct TheoryArgs {
  double n = 0;
  int d = 2;
  double c0 = 1;
  double k = 1;
};

int RunTheory(const TheoryArgs& a) {
  const theory::ThresholdParams params{a.n, a.d, a.k, a.c0};
  for (const theory::TableRow& row : theory::TheoryTable(params)) {
    std::cout << std::left << std::setw(26) << row.name << ' ' << std::setw(14)
              << std::setprecision(8) << row.value << ' ' << row.note << '\n';
  }
  return kTrue;
}

struct SweepArgs {
  std::string config;
  std::vector<std::string> settings;
  std::string format;
  std::string out;
};

int RunSweepCommand(const SweepArgs& a) {
  SweepFile file;
  if (!a.config.empty()) {
    std::istringstream in(Slurp(a.config));
    file = ParseSweepFile(in);
  }
  for (const std::string& s : a.settings) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("--set expects key=value, got '" + s + "'");
    }
    ApplySweepSetting(file, s.substr(0, eq), s.substr(eq + 1));
  }
  if (!a.format.empty()) file.format = ParseOutputFormat(a.format);
  if (!a.out.empty()) file.output = a.out;
  for (const std::string& w : file.config.Warnings()) std::cerr << "warning: " << w << '\n';
  const auto records = RunSweep(file.config);
  std::ostringstream text;
  Emit(text, records, file.format.value_or(OutputFormat::kCsv));
  Deliver(file.output.value_or(""), text.str());
  return kTrue;
}

}  // namespace
}  // namespace rainbowk

int main(int argc, char** argv) {
  namespace rk = rainbowk;
  CLI::App app{"Rainbow k-connectivity of random graphs", "rainbowk"};
  app.require_subcommand(1);
  int code = rk::kTrue;

  rk::GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Sample G(n, p) and print its edge list");
  gen_cmd->add_option("-n,--n", gen.n, "Vertex count")->required();
  gen_cmd->add_option("-p,--p", gen.p, "Edge probability in [0, 1]")->required();
  gen_cmd->add_option("--seed", gen.seed, "Seed");
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->callback([&] { code = rk::RunGen(gen); });

  rk::ColorArgs color;
  auto* color_cmd = app.add_subcommand(
      "color", "Random c-coloring of a graph, or a verified rainbow-k-coloring with --k");
  color_cmd->add_option("graph", color.graph, "Edge list file ('-' for stdin)")->required();
  auto* colors_opt = color_cmd->add_option("-c,--colors", color.colors, "Number of colors");
  auto* k_opt = color_cmd->add_option("-k,--k", color.k, "Run the rainbow-k-coloring algorithm");
  colors_opt->excludes(k_opt);
  color_cmd->add_option("--attempts", color.attempts, "Colorings tried per color count")
      ->needs(k_opt);
  color_cmd->add_option("--known-p", color.known_p, "Edge probability, if known")
      ->needs(k_opt);
  color_cmd->add_option("--seed", color.seed, "Seed");
  color_cmd->add_option("-o,--out", color.out, "Output file (default stdout)");
  color_cmd->callback([&] { code = rk::RunColor(color); });

  rk::VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check rainbow k-connectivity");
  verify_cmd->add_option("graph", verify.graph, "Edge list file")->required();
  verify_cmd->add_option("coloring", verify.coloring, "Coloring file")->required();
  verify_cmd->add_option("-k,--k", verify.k, "Disjoint paths required per pair");
  verify_cmd->callback([&] { code = rk::RunVerify(verify); });

  rk::RckArgs rck;
  auto* rck_cmd = app.add_subcommand("rck", "Exact rc_k of a small graph");
  rck_cmd->add_option("graph", rck.graph, "Edge list file")->required();
  rck_cmd->add_option("-k,--k", rck.k, "Disjoint paths required per pair");
  rck_cmd->add_option("--max-colors", rck.max_colors, "Largest color count tried");
  rck_cmd->add_option("--edge-budget", rck.edge_budget, "Refuse larger graphs");
  rck_cmd->add_option("--certificate", rck.certificate, "Write an optimal coloring here");
  rck_cmd->callback([&] { code = rk::RunRck(rck); });

  rk::GrowArgs grow;
  auto* grow_cmd = app.add_subcommand("grow", "Disjoint length-d paths by tree growth");
  grow_cmd->add_option("graph", grow.graph, "Edge list file")->required();
  grow_cmd->add_option("-u,--u", grow.u, "Source vertex")->required();
  grow_cmd->add_option("-v,--v", grow.v, "Target vertex")->required();
  grow_cmd->add_option("-d,--d", grow.d, "Path length");
  grow_cmd->add_option("-b,--branching", grow.branching,
                       "Children per tree vertex (default mean degree / 10)");
  grow_cmd->add_option("--seed", grow.seed, "Seed for neighbor sampling");
  grow_cmd->add_flag("--lowest-index", grow.lowest_index,
                     "Take the lowest-index eligible neighbors instead of sampling");
  grow_cmd->add_option("-o,--out", grow.out, "Output file (default stdout)");
  grow_cmd->callback([&] { code = rk::RunGrow(grow); });

  rk::TheoryArgs th;
  auto* theory_cmd = app.add_subcommand("theory", "Print threshold quantities");
  theory_cmd->add_option("-n,--n", th.n, "Vertex count")->required();
  theory_cmd->add_option("-d,--d", th.d, "Depth");
  theory_cmd->add_option("--c0", th.c0, "Constant c0 >= 1");
  theory_cmd->add_option("-k,--k", th.k, "Multiplicity");
  theory_cmd->callback([&] { code = rk::RunTheory(th); });

  rk::SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo threshold sweep or growth census");
  sweep_cmd->add_option("--config", sweep.config, "key = value config file");
  sweep_cmd->add_option("--set", sweep.settings, "Override one setting, key=value");
  sweep_cmd->add_option("--format", sweep.format, "csv or json");
  sweep_cmd->add_option("-o,--out", sweep.out, "Output file (default stdout)");
  sweep_cmd->callback([&] { code = rk::RunSweepCommand(sweep); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? rk::kTrue : rk::kUsage;
  } catch (const rk::BudgetExceeded& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return rk::kRefused;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return rk::kUsage;
  }
  return code;
}
