// Copyright 2026 The CoverGrow Authors
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

#include "covergrow/cli.h"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "CLI11.hpp"
#include "covergrow/clustering.h"
#include "covergrow/cover.h"
#include "covergrow/edge_deletion.h"
#include "covergrow/error.h"
#include "covergrow/generators.h"
#include "covergrow/io.h"
#include "covergrow/oracles.h"

namespace covergrow::cli {
namespace {

using nlohmann::json;

std::string FormatValue(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) return fmt::format("{}", v.get<double>());
  return v.dump();
}

std::string JoinValues(const json& values) {
  std::string out;
  for (const json& v : values) {
    out += ' ';
    out += FormatValue(v);
  }
  return out;
}

json Ids(const std::vector<NodeId>& ids) { return json(ids); }

bool Flag(const RunConfig& config, const std::string& name) {
  return config.flags.contains(name);
}

std::string FlagValue(const RunConfig& config, const std::string& name,
                      const std::string& fallback) {
  const auto it = config.flags.find(name);
  return it == config.flags.end() ? fallback : it->second;
}

void AddRunStats(Report& report, std::span<const double> costs) {
  const SampleStats stats = Summarize(costs);
  report.Pairs({{"mean", stats.mean}, {"stderr", stats.std_error}});
}

void AddCover(Report& report, const CoverResult& r) {
  report.Scalar("cost", r.cost);
  report.List("cover", Ids(r.cover));
  report.List("mis", Ids(r.independent));
}

void WarnIfWeighted(const NodeWeightedGraph& g, const std::string& what,
                    std::ostream& err) {
  if (!g.HasUnitWeights()) {
    err << "warning: " << what << " ignores node weights\n";
  }
}

int RunVc(const RunConfig& config, Report& report, std::ostream& err) {
  const GraphFile file = ParseGraph(ReadFile(config.input_path));
  const NodeWeightedGraph& g = file.graph;
  const std::string algo = config.algorithm.empty() ? "neighbor" : config.algorithm;

  std::optional<Permutation> perm;
  if (Flag(config, "perm")) {
    if (algo != "neighbor" && algo != "greedy-mis" && algo != "parallel-mis") {
      err << "error: --perm applies only to neighbor, greedy-mis and parallel-mis\n";
      return kExitUsage;
    }
    perm = ParsePermutation(ReadFile(FlagValue(config, "perm", "")));
  }
  if (algo == "matching" || algo == "greedy-mis") WarnIfWeighted(g, algo, err);

  auto run_once = [&](RandomSource& rng, Report* detail) -> double {
    CoverResult r;
    if (algo == "neighbor") {
      r = perm ? NeighborCover(g, *perm) : NeighborCoverRandomized(g, rng);
    } else if (algo == "greedy-mis") {
      r = perm ? NeighborCover(g, *perm) : GreedyMis(g, rng);
    } else if (algo == "matching") {
      r = MatchingVc(g, file.edge_order);
    } else if (algo == "pitt") {
      r = PittVc(g, file.edge_order, rng);
    } else if (algo == "local-ratio") {
      LocalRatioResult lr = LocalRatioVc(g, file.edge_order);
      if (detail) {
        AddCover(*detail, lr.result);
        detail->Scalar("certificate", lr.certificate.total);
      }
      return lr.result.cost;
    } else if (algo == "parallel-mis") {
      const Permutation order =
          perm ? *perm
               : (g.node_count() == 0 ? Permutation() : UniformShuffle(g.node_count(), rng));
      ParallelMisResult pr = ParallelGreedyMis(g, order);
      if (detail) {
        AddCover(*detail, pr.result);
        detail->Scalar("rounds", pr.rounds);
      }
      return pr.result.cost;
    } else {
      throw InvalidInput("unknown vc algorithm '" + algo + "'");
    }
    if (detail) AddCover(*detail, r);
    return r.cost;
  };

  if (config.runs <= 1) {
    RandomSource rng(config.seed);
    run_once(rng, &report);
    return kExitOk;
  }
  std::vector<double> costs;
  for (std::size_t i = 0; i < config.runs; ++i) {
    RandomSource rng(config.seed + i);
    costs.push_back(run_once(rng, nullptr));
  }
  AddRunStats(report, costs);
  return kExitOk;
}

void AddClustering(Report& report, const Clustering& c) {
  report.Scalar("clusters", c.cluster_count);
  if (!c.pivots.empty()) report.List("pivots", Ids(c.pivots));
  for (NodeId v = 0; v < c.assignment.size(); ++v) {
    report.Record("node", json::array({v, c.assignment[v]}));
  }
}

void AddLabeling(Report& report, const StcLabeling& lab) {
  for (const Edge& e : lab.weak_edges) report.Record("weak", json::array({e.u, e.v}));
  for (const Edge& e : lab.new_edges) report.Record("new", json::array({e.u, e.v}));
}

int RunPivot(const RunConfig& config, Report& report, std::ostream& err) {
  const NodeWeightedGraph g = ParseGraph(ReadFile(config.input_path)).graph;
  WarnIfWeighted(g, "pivot", err);
  if (config.runs <= 1) {
    RandomSource rng(config.seed);
    const Clustering c = RandomPivot(g, rng);
    AddClustering(report, c);
    report.Scalar("cost", CorrelationClusteringCost(g, c));
    return kExitOk;
  }
  std::vector<double> costs;
  for (std::size_t i = 0; i < config.runs; ++i) {
    RandomSource rng(config.seed + i);
    costs.push_back(static_cast<double>(CorrelationClusteringCost(g, RandomPivot(g, rng))));
  }
  AddRunStats(report, costs);
  return kExitOk;
}

int RunStc(const RunConfig& config, Report& report, std::ostream& err) {
  const NodeWeightedGraph g = ParseGraph(ReadFile(config.input_path)).graph;
  WarnIfWeighted(g, "stc", err);
  RandomSource rng(config.seed);
  const StcLabeling lab = StcFromClustering(g, RandomPivot(g, rng));
  AddLabeling(report, lab);
  report.Scalar("cost", lab.cost());
  return kExitOk;
}

void AddDeletion(Report& report, const DeletionResult& r) {
  report.Scalar("cost", r.cost);
  report.List("deleted", Ids(r.deleted));
  report.List("kept", Ids(r.kept));
  if (r.labels) {
    for (NodeId v = 0; v < r.labels->size(); ++v) {
      report.Record("label", json::array({v, (*r.labels)[v]}));
    }
  }
}

int RunDeletion(const RunConfig& config, Report& report) {
  const std::string text = ReadFile(config.input_path);
  RandomSource rng(config.seed);
  if (config.subcommand == "mind2m") {
    AddDeletion(report, MinD2M(ParseEdgeWeightedGraph(text), rng));
  } else if (config.subcommand == "ded2") {
    AddDeletion(report, Ded2(ParseDag(text, !Flag(config, "no-acyclic-check")), rng));
  } else {
    const EdgeColoredHypergraph h = ParseHypergraph(text);
    DeletionResult r = ColorEc(h, rng);
    const std::string fill = FlagValue(config, "fill-labels", "none");
    if (fill == "uniform") {
      FillUnlabeled(h, r, rng);
    } else if (fill != "none") {
      throw InvalidInput("--fill-labels accepts 'uniform' or 'none'");
    }
    AddDeletion(report, r);
  }
  return kExitOk;
}

int RunOracle(const RunConfig& config, Report& report) {
  const std::string problem = FlagValue(config, "problem", "");
  const std::string text = ReadFile(config.input_path);
  if (problem == "vc") {
    const auto r = ExactVertexCover(ParseGraph(text).graph);
    report.Scalar("opt", r.opt_cost);
    report.List("cover", Ids(r.witness));
  } else if (problem == "cc") {
    const auto r = ExactCorrelationClustering(ParseGraph(text).graph);
    report.Scalar("opt", r.opt_cost);
    AddClustering(report, r.witness);
  } else if (problem == "stc") {
    const auto r = ExactMinStc(ParseGraph(text).graph);
    report.Scalar("opt", r.opt_cost);
    AddLabeling(report, r.witness);
  } else if (problem == "mind2m" || problem == "ded2") {
    const auto r = problem == "mind2m"
                       ? ExactMinD2M(ParseEdgeWeightedGraph(text))
                       : ExactDed2(ParseDag(text, !Flag(config, "no-acyclic-check")));
    report.Scalar("opt", r.opt_cost);
    report.List("deleted", Ids(r.witness));
  } else if (problem == "colorec") {
    const auto r = ExactColorEc(ParseHypergraph(text));
    report.Scalar("opt", r.opt_cost);
    for (NodeId v = 0; v < r.witness.size(); ++v) {
      report.Record("label", json::array({v, r.witness[v]}));
    }
  } else {
    throw InvalidInput("unknown oracle problem '" + problem + "'");
  }
  return kExitOk;
}

InstanceKind KindFor(RatioAlgorithm algorithm) {
  switch (algorithm) {
    case RatioAlgorithm::kMinD2M: return InstanceKind::kEdgeWeightedGraph;
    case RatioAlgorithm::kDed2: return InstanceKind::kDag;
    case RatioAlgorithm::kColorEc: return InstanceKind::kHypergraph;
    default: return InstanceKind::kGraph;
  }
}

int RunRatio(const RunConfig& config, Report& report) {
  const RatioAlgorithm algorithm =
      ParseRatioAlgorithm(config.algorithm.empty() ? "neighbor" : config.algorithm);
  const Instance instance =
      ParseInstance(ReadFile(config.input_path), KindFor(algorithm),
                    !Flag(config, "no-acyclic-check"));
  const RatioEstimate est = EstimateRatio(algorithm, instance, config.runs, config.seed);
  const bool pass = est.Passes();
  report.Pairs({{"mean", est.mean},
                {"stderr", est.std_error},
                {"opt", est.opt},
                {"bound", est.bound},
                {"verdict", pass ? "pass" : "fail"}});
  return pass ? kExitOk : kExitRatioFail;
}

std::vector<std::size_t> ParseSizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(item, &pos);
    if (pos != item.size()) throw InvalidInput("bad size '" + item + "'");
    sizes.push_back(static_cast<std::size_t>(v));
  }
  return sizes;
}

int RunBenchCommand(const RunConfig& config, Report& report) {
  BenchConfig bench;
  bench.family = FlagValue(config, "family", "gnp");
  bench.algorithm = config.algorithm.empty() ? "neighbor" : config.algorithm;
  bench.edge_probability = std::stod(FlagValue(config, "p", "0.5"));
  bench.average_degree = std::stod(FlagValue(config, "avg-degree", "8"));
  bench.weighted = Flag(config, "weighted");
  bench.repetitions = std::stoul(FlagValue(config, "reps", "5"));
  bench.seed = config.seed;
  bench.sizes = ParseSizes(FlagValue(config, "sizes", "1024,2048,4096"));
  report.List("columns", json::array({"n", "m", "median_ms", "cost", "rounds"}));
  for (const BenchRow& row : RunBench(bench)) {
    report.Record("row", json::array({row.n, row.m, row.median_ms, row.cost, row.rounds}));
  }
  return kExitOk;
}

}  // namespace

void Report::Scalar(const std::string& key, nlohmann::json value) {
  entries_.push_back({Kind::kScalar, key, json::array({std::move(value)})});
}

void Report::List(const std::string& key, nlohmann::json values) {
  entries_.push_back({Kind::kList, key, std::move(values)});
}

void Report::Record(const std::string& key, nlohmann::json values) {
  entries_.push_back({Kind::kRecord, key, std::move(values)});
}

void Report::Pairs(
    const std::vector<std::pair<std::string, nlohmann::json>>& pairs) {
  json values = json::array();
  for (const auto& [k, v] : pairs) values.push_back(json::array({k, v}));
  entries_.push_back({Kind::kPairs, "", std::move(values)});
}

std::string Report::Text() const {
  std::string out;
  for (const Entry& e : entries_) {
    if (e.kind == Kind::kPairs) {
      std::string line;
      for (const json& kv : e.values) {
        if (!line.empty()) line += ' ';
        line += kv[0].get<std::string>() + ' ' + FormatValue(kv[1]);
      }
      out += line + '\n';
    } else {
      out += e.key + JoinValues(e.values) + '\n';
    }
  }
  return out;
}

nlohmann::ordered_json Report::Json() const {
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const Entry& e : entries_) {
    switch (e.kind) {
      case Kind::kScalar: out[e.key] = nlohmann::ordered_json(e.values[0]); break;
      case Kind::kList: out[e.key] = nlohmann::ordered_json(e.values); break;
      case Kind::kRecord:
        if (!out.contains(e.key)) out[e.key] = nlohmann::ordered_json::array();
        out[e.key].push_back(nlohmann::ordered_json(e.values));
        break;
      case Kind::kPairs:
        for (const json& kv : e.values) {
          out[kv[0].get<std::string>()] = nlohmann::ordered_json(kv[1]);
        }
        break;
    }
  }
  return out;
}

std::vector<BenchRow> RunBench(const BenchConfig& config) {
  using Clock = std::chrono::steady_clock;
  if (config.repetitions == 0) throw InvalidInput("bench needs at least one repetition");
  std::vector<BenchRow> rows;
  for (std::size_t n : config.sizes) {
    RandomSource gen(config.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
    double p = 0.0;
    if (config.family == "gnp") {
      p = config.edge_probability;
    } else if (config.family == "sparse") {
      p = n > 1 ? std::min(1.0, config.average_degree / static_cast<double>(n - 1)) : 0.0;
    } else if (config.family != "edgeless") {
      throw InvalidInput("unknown graph family '" + config.family + "'");
    }
    NodeWeightedGraph g = RandomGnp(n, p, gen);
    if (config.weighted) g = g.WithWeights(RandomIntegerWeights(n, 1, 10, gen));

    BenchRow row;
    row.n = n;
    row.m = g.edge_count();
    std::vector<double> times;
    for (std::size_t rep = 0; rep < config.repetitions; ++rep) {
      RandomSource rng(config.seed + rep);
      const auto start = Clock::now();
      double cost = 0.0;
      if (config.algorithm == "neighbor") {
        cost = NeighborCoverRandomized(g, rng).cost;
      } else if (config.algorithm == "greedy-mis") {
        cost = GreedyMis(g, rng).cost;
      } else if (config.algorithm == "parallel-mis") {
        const Permutation perm = n == 0 ? Permutation() : UniformShuffle(n, rng);
        const ParallelMisResult r = ParallelGreedyMis(g, perm);
        cost = r.result.cost;
        row.rounds = std::max(row.rounds, r.rounds);
      } else {
        throw InvalidInput("unknown bench algorithm '" + config.algorithm + "'");
      }
      const auto stop = Clock::now();
      times.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
      if (rep == 0) row.cost = cost;
    }
    std::sort(times.begin(), times.end());
    row.median_ms = times[times.size() / 2];
    rows.push_back(row);
  }
  return rows;
}

int Run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  Report report;
  int code = kExitOk;
  try {
    const std::string& cmd = config.subcommand;
    if (cmd == "vc") {
      code = RunVc(config, report, err);
    } else if (cmd == "pivot") {
      code = RunPivot(config, report, err);
    } else if (cmd == "stc") {
      code = RunStc(config, report, err);
    } else if (cmd == "mind2m" || cmd == "ded2" || cmd == "colorec") {
      code = RunDeletion(config, report);
    } else if (cmd == "oracle") {
      code = RunOracle(config, report);
    } else if (cmd == "ratio") {
      code = RunRatio(config, report);
    } else if (cmd == "bench") {
      code = RunBenchCommand(config, report);
    } else {
      err << "error: unknown subcommand '" << cmd << "'\n";
      return kExitUsage;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << config.input_path << ": " << e.what() << '\n';
    return kExitParse;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParse;
  } catch (const GuardExceeded& e) {
    err << "error: " << e.what() << "; use a smaller instance for exact oracles\n";
    return kExitGuard;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::logic_error& e) {  // std::stod and friends
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (code == kExitUsage) return code;
  if (Flag(config, "json")) {
    out << report.Json().dump() << '\n';
  } else {
    out << report.Text();
  }
  return code;
}

int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err) {
  CLI::App app{"Vertex cover, MIS, Pivot clustering and edge-deletion algorithms",
               "covergrow"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  if (const char* env = std::getenv("COVERGROW_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      err << "error: COVERGROW_SEED is not an unsigned integer\n";
      return kExitUsage;
    }
  }
  bool json_output = false;
  app.add_option("--seed", config.seed, "Random seed (default 0 or $COVERGROW_SEED)");
  app.add_flag("--json", json_output, "Emit one JSON object instead of text lines");

  std::string perm_path;
  std::string fill_labels;
  std::string problem;
  std::string family;
  std::string sizes;
  std::string p;
  std::string avg_degree;
  std::string reps;
  bool no_acyclic_check = false;
  bool weighted = false;

  auto* vc = app.add_subcommand("vc", "Vertex cover / maximal independent set");
  vc->add_option("file", config.input_path, "graph file")->required();
  vc->add_option("--algo", config.algorithm)
      ->check(CLI::IsMember({"neighbor", "greedy-mis", "matching", "pitt",
                             "local-ratio", "parallel-mis"}));
  vc->add_option("--runs", config.runs)->check(CLI::PositiveNumber);
  vc->add_option("--perm", perm_path, "file with a node order");

  auto* pivot = app.add_subcommand("pivot", "Pivot correlation clustering");
  pivot->add_option("file", config.input_path)->required();
  pivot->add_option("--runs", config.runs)->check(CLI::PositiveNumber);

  auto* stc = app.add_subcommand("stc", "STC+ labeling from a Pivot clustering");
  stc->add_option("file", config.input_path)->required();

  auto* mind2m = app.add_subcommand("mind2m", "Delete edges to leave a matching");
  mind2m->add_option("file", config.input_path, "ewgraph file")->required();

  auto* ded2 = app.add_subcommand("ded2", "Delete arcs to destroy directed 2-paths");
  ded2->add_option("file", config.input_path, "dag file")->required();
  ded2->add_flag("--no-acyclic-check", no_acyclic_check);

  auto* colorec = app.add_subcommand("colorec", "Colored edge clustering");
  colorec->add_option("file", config.input_path, "chg file")->required();
  colorec->add_option("--fill-labels", fill_labels)->check(CLI::IsMember({"uniform", "none"}));

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by enumeration");
  oracle->add_option("problem", problem)
      ->required()
      ->check(CLI::IsMember({"vc", "cc", "stc", "mind2m", "ded2", "colorec"}));
  oracle->add_option("file", config.input_path)->required();
  oracle->add_flag("--no-acyclic-check", no_acyclic_check);

  auto* ratio = app.add_subcommand("ratio", "Monte-Carlo approximation ratio check");
  ratio->add_option("file", config.input_path)->required();
  ratio->add_option("--algo", config.algorithm)
      ->check(CLI::IsMember({"neighbor", "greedy-mis", "pitt", "pivot-cc",
                             "pivot-stc", "mind2m", "ded2", "colorec"}));
  ratio->add_option("--runs", config.runs)->check(CLI::PositiveNumber);

  auto* bench = app.add_subcommand("bench", "Timing and round-count table");
  bench->add_option("--algo", config.algorithm)
      ->check(CLI::IsMember({"neighbor", "greedy-mis", "parallel-mis"}));
  bench->add_option("--family", family)->check(CLI::IsMember({"gnp", "sparse", "edgeless"}));
  bench->add_option("--sizes", sizes, "comma-separated node counts");
  bench->add_option("--p", p, "edge probability (gnp)");
  bench->add_option("--avg-degree", avg_degree, "expected degree (sparse)");
  bench->add_option("--reps", reps, "repetitions per size");
  bench->add_flag("--weighted", weighted, "integer node weights 1..10");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  config.subcommand = app.get_subcommands().front()->get_name();
  if (config.subcommand == "ratio" && ratio->count("--runs") == 0) config.runs = 1000;
  if (json_output) config.flags["json"] = "";
  if (!perm_path.empty()) config.flags["perm"] = perm_path;
  if (!fill_labels.empty()) config.flags["fill-labels"] = fill_labels;
  if (!problem.empty()) config.flags["problem"] = problem;
  if (no_acyclic_check) config.flags["no-acyclic-check"] = "";
  if (weighted) config.flags["weighted"] = "";
  if (!family.empty()) config.flags["family"] = family;
  if (!sizes.empty()) config.flags["sizes"] = sizes;
  if (!p.empty()) config.flags["p"] = p;
  if (!avg_degree.empty()) config.flags["avg-degree"] = avg_degree;
  if (!reps.empty()) config.flags["reps"] = reps;
  return Run(config, out, err);
}

}  // namespace covergrow::cli
