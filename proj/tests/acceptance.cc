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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any hard criterion fails. The runtime-shape check is soft and
// reports SOFT-FAIL without affecting the exit status.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "covergrow/clustering.h"
#include "covergrow/cover.h"
#include "covergrow/edge_deletion.h"
#include "covergrow/generators.h"
#include "covergrow/oracles.h"
#include "covergrow/random.h"
#include "covergrow/reductions.h"
#include "test_util.h"

namespace covergrow {
namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

int hard_failures = 0;

void Report(int id, const std::string& name, const std::function<Verdict()>& check,
            bool soft = false) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = check();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const char* tag = v.pass ? "PASS" : (soft ? "SOFT-FAIL" : "FAIL");
  if (!v.pass && !soft) ++hard_failures;
  std::printf("[%s] criterion %d: %s (%s) [%.1fs]\n", tag, id, name.c_str(), v.detail.c_str(),
              secs);
  std::fflush(stdout);
}

// Random graph with n in [lo, hi], p from `probs`, integer weights 1..10.
NodeWeightedGraph RandomWeightedGraph(std::size_t lo, std::size_t hi,
                                      const std::vector<double>& probs, RandomSource& rng) {
  const std::size_t n = lo + rng.UniformBelow(hi - lo + 1);
  const double p = probs[rng.UniformBelow(probs.size())];
  return testing::RandomGraph(n, p, rng, true);
}

std::vector<NodeWeightedGraph> Criterion1Graphs() {
  RandomSource rng(1001);
  std::vector<NodeWeightedGraph> out;
  for (int i = 0; i < 200; ++i) out.push_back(RandomWeightedGraph(4, 12, {0.2, 0.5, 0.8}, rng));
  return out;
}

Verdict ExpectationBound() {
  int failures = 0;
  double worst = 0.0;
  std::uint64_t seed = 0;
  for (const auto& g : Criterion1Graphs()) {
    const auto r = EstimateRatio(RatioAlgorithm::kNeighborCover, g, 5000, seed);
    seed += 5000;
    failures += !r.Passes();
    if (r.opt > 0) worst = std::max(worst, r.mean / r.opt);
  }
  return {failures == 0,
          fmt::format("200 graphs, 5000 runs each, {} failures, max mean/OPT {:.3f}", failures,
                      worst)};
}

Verdict ClosedForm() {
  const std::vector<Edge> edge = {{0, 1}};
  const Instance g = NodeWeightedGraph::Build(2, edge, std::vector<double>{1.0, 3.0});
  const auto r = EstimateRatio(RatioAlgorithm::kNeighborCover, g, 100000, 0);
  const double target = 2.0 * 1.0 * 3.0 / (1.0 + 3.0);
  const double dev = std::abs(r.mean - target);
  return {dev <= 4.0 * r.std_error,
          fmt::format("mean {:.5f} vs 1.5, |dev| {:.5f} <= 4*stderr {:.5f}", r.mean, dev,
                      4.0 * r.std_error)};
}

Verdict StructuralInvariants() {
  RandomSource gen(3003);
  int violations = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::size_t n = 1 + gen.UniformBelow(30);
    const auto g = testing::RandomGraph(n, gen.NextDouble(), gen, i % 2 == 0);
    RandomSource rng(i);
    const auto r = NeighborCoverRandomized(g, rng);
    bool ok = VerifyCover(g, r.cover) && VerifyMis(g, r.independent) &&
              r.cover.size() + r.independent.size() == n;
    std::vector<bool> seen(n, false);
    for (NodeId v : r.cover) seen[v] = true;
    for (NodeId v : r.independent) {
      ok = ok && !seen[v];
      seen[v] = true;
    }
    ok = ok && std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
    violations += !ok;
  }
  return {violations == 0, fmt::format("10000 (graph, seed) pairs, {} violations", violations)};
}

Verdict Equivalences() {
  std::size_t checks = 0, mismatches = 0;
  auto check_graph = [&](const NodeWeightedGraph& g) {
    testing::ForEachPermutation(g.node_count(), [&](const Permutation& p) {
      auto pivots = Pivot(g, p).pivots;
      std::sort(pivots.begin(), pivots.end());
      const auto seq = NeighborCover(g, p).independent;
      const auto par = ParallelGreedyMis(g, p).result.independent;
      ++checks;
      mismatches += !(pivots == seq && seq == par);
    });
  };
  for (std::size_t n = 1; n <= 6; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << testing::PairCount(n)); ++mask) {
      check_graph(testing::FromMask(n, mask));
    }
  }
  return {mismatches == 0,
          fmt::format("all labeled graphs n<=6, {} (graph, permutation) pairs, {} mismatches",
                      checks, mismatches)};
}

Verdict PivotBound() {
  std::vector<NodeWeightedGraph> graphs;
  for (std::size_t n = 0; n <= 6; ++n) {
    for (auto& g : testing::NonIsomorphicGraphs(n)) graphs.push_back(std::move(g));
  }
  const std::size_t exhaustive = graphs.size();
  RandomSource gen(5005);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + gen.UniformBelow(7);
    graphs.push_back(testing::RandomGraph(n, gen.NextDouble(), gen));
  }
  int stc_fail = 0, cc_fail = 0;
  std::uint64_t seed = 0;
  for (const auto& g : graphs) {
    stc_fail += !EstimateRatio(RatioAlgorithm::kPivotStc, g, 5000, seed).Passes();
    cc_fail += !EstimateRatio(RatioAlgorithm::kPivotCc, g, 5000, seed).Passes();
    seed += 5000;
  }
  return {stc_fail == 0 && cc_fail == 0,
          fmt::format("{} non-isomorphic graphs n<=6 plus 200 random n<=7, 5000 runs; "
                      "STC+ failures {}, CC failures {}",
                      exhaustive, stc_fail, cc_fail)};
}

Verdict ImplicitExplicit() {
  RandomSource gen(6006);
  int mismatches = 0;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const std::size_t n = 2 + gen.UniformBelow(14);
    const std::size_t pairs = n * (n - 1) / 2;

    const auto g = RandomEdgeWeightedGraph(n, std::min<std::size_t>(gen.UniformBelow(31), pairs),
                                           10, gen);
    RandomSource a(seed), b(seed);
    mismatches += MinD2M(g, a).deleted != NeighborCoverRandomized(LineGraph(g), b).cover;

    const auto d = RandomDag(n, std::min<std::size_t>(gen.UniformBelow(31), pairs), 10, gen);
    RandomSource c(seed), e(seed);
    mismatches += Ded2(d, c).deleted != NeighborCoverRandomized(Ded2ConflictGraph(d), e).cover;

    const auto k = static_cast<std::uint32_t>(1 + gen.UniformBelow(4));
    const auto h = RandomColoredHypergraph(n, gen.UniformBelow(21), k, 4, 10, gen);
    RandomSource f(seed), q(seed);
    mismatches +=
        ColorEc(h, f).deleted != NeighborCoverRandomized(ColorEcConflictGraph(h), q).cover;
  }
  return {mismatches == 0,
          fmt::format("1000 seeds x 3 problems, {} mismatched deleted sets", mismatches)};
}

Verdict DeletionBounds() {
  RandomSource gen(7007);
  std::map<std::string, int> failures = {{"mind2m", 0}, {"ded2", 0}, {"colorec", 0}};
  std::uint64_t seed = 0;
  for (int i = 0; i < 50; ++i) {
    const std::size_t n = 3 + gen.UniformBelow(8);
    const std::size_t pairs = n * (n - 1) / 2;
    const std::size_t m = 1 + gen.UniformBelow(std::min<std::size_t>(pairs, 20));
    const Instance g = RandomEdgeWeightedGraph(n, m, 10, gen);
    failures["mind2m"] += !EstimateRatio(RatioAlgorithm::kMinD2M, g, 5000, seed).Passes();
    const Instance d = RandomDag(n, m, 10, gen);
    failures["ded2"] += !EstimateRatio(RatioAlgorithm::kDed2, d, 5000, seed).Passes();
    const std::size_t hn = 2 + gen.UniformBelow(7);
    const auto k = static_cast<std::uint32_t>(2 + gen.UniformBelow(3));
    const Instance h = RandomColoredHypergraph(hn, 1 + gen.UniformBelow(20), k, 4, 10, gen);
    failures["colorec"] += !EstimateRatio(RatioAlgorithm::kColorEc, h, 5000, seed).Passes();
    seed += 5000;
  }
  const bool ok = failures["mind2m"] + failures["ded2"] + failures["colorec"] == 0;
  return {ok, fmt::format("50 instances each, 5000 runs; failures mind2m {} ded2 {} colorec {}",
                          failures["mind2m"], failures["ded2"], failures["colorec"])};
}

Verdict LocalRatioCertificates() {
  auto graphs = Criterion1Graphs();
  RandomSource gen(8008);
  for (int i = 0; i < 300; ++i) graphs.push_back(RandomWeightedGraph(1, 16, {0.1, 0.3, 0.6}, gen));
  int bad_feasible = 0, bad_opt = 0, bad_ratio = 0;
  for (const auto& g : graphs) {
    const auto lr = LocalRatioVc(g);
    const double opt = ExactVertexCover(g).opt_cost;
    bad_feasible += !VerifyCertificate(g, lr.certificate);
    bad_opt += !(lr.certificate.total <= opt);
    bad_ratio += !(lr.result.cost <= 2.0 * lr.certificate.total);
  }
  return {bad_feasible + bad_opt + bad_ratio == 0,
          fmt::format("{} instances; infeasible {}, total > OPT {}, cost > 2*total {}",
                      graphs.size(), bad_feasible, bad_opt, bad_ratio)};
}

Verdict ParallelRounds() {
  std::size_t worst_rounds = 0, checks = 0;
  int violations = 0;
  std::string per_size;
  for (int family = 0; family < 2; ++family) {
    for (int lg = 10; lg <= 14; ++lg) {
      const std::size_t n = std::size_t{1} << lg;
      const double p = family == 0 ? 0.5 : 8.0 / static_cast<double>(n - 1);
      std::size_t size_max = 0;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        RandomSource rng(seed * 1000 + lg + 100 * family);
        const auto g = RandomGnp(n, p, rng);
        const auto r = ParallelGreedyMis(g, UniformShuffle(n, rng));
        ++checks;
        size_max = std::max(size_max, r.rounds);
        violations += r.rounds > 8.0 * lg;
      }
      worst_rounds = std::max(worst_rounds, size_max);
      per_size += fmt::format(" {}{}:{}", family == 0 ? "d" : "s", lg, size_max);
    }
  }
  return {violations == 0,
          fmt::format("{} runs, {} over 8*log2(n); max rounds per log2 n (d=dense, s=sparse):{}",
                      checks, violations, per_size)};
}

Verdict RuntimeShape() {
  using Clock = std::chrono::steady_clock;
  std::vector<double> medians;
  std::vector<std::size_t> sizes;
  for (std::size_t n = 10000; n <= 1280000; n *= 2) sizes.push_back(n);
  for (std::size_t n : sizes) {
    RandomSource gen(9009 + n);
    const auto g = RandomGnp(n, 8.0 / static_cast<double>(n - 1), gen)
                       .WithWeights(RandomIntegerWeights(n, 1, 10, gen));
    std::vector<double> times;
    for (int rep = 0; rep < 5; ++rep) {
      RandomSource rng(rep);
      const auto start = Clock::now();
      const auto r = NeighborCoverRandomized(g, rng);
      times.push_back(std::chrono::duration<double>(Clock::now() - start).count());
      if (r.cover.size() > n) return {false, "bad cover"};
    }
    std::sort(times.begin(), times.end());
    medians.push_back(times[2]);
  }
  double worst = 0.0;
  std::string ratios;
  for (std::size_t i = 1; i < medians.size(); ++i) {
    const double ratio = medians[i] / medians[i - 1];
    worst = std::max(worst, ratio);
    ratios += fmt::format(" {:.2f}", ratio);
  }
  return {worst <= 2.4, fmt::format("n = 1e4..1.28e6, m ~ 4n, median of 5; doubling ratios:{}; "
                                    "{:.1f} ms at largest n",
                                    ratios, medians.back() * 1e3)};
}

Verdict ShuffleDistribution() {
  RandomSource rng(11011);
  const int draws = 100000;
  int heavy = 0;
  const std::vector<double> w13 = {1.0, 3.0};
  for (int i = 0; i < draws; ++i) heavy += WeightedShuffle(w13, rng)[0] == 1;
  const double freq = static_cast<double>(heavy) / draws;
  const double sigma = std::sqrt(0.75 * 0.25 / draws);
  const bool first_ok = std::abs(freq - 0.75) <= 4.0 * sigma;

  // Two-sample homogeneity test over the 24 orders of 4 items.
  std::map<std::vector<NodeId>, std::pair<int, int>> counts;
  const std::vector<double> equal(4, 1.0);
  for (int i = 0; i < draws; ++i) {
    const auto a = WeightedShuffle(equal, rng);
    const auto b = UniformShuffle(4, rng);
    ++counts[{a.begin(), a.end()}].first;
    ++counts[{b.begin(), b.end()}].second;
  }
  double stat = 0.0;
  for (const auto& [order, c] : counts) {
    const double total = c.first + c.second;
    const double expected = total / 2.0;
    stat += (c.first - expected) * (c.first - expected) / expected +
            (c.second - expected) * (c.second - expected) / expected;
  }
  // Chi-square with 23 degrees of freedom at significance 1e-3.
  const double critical = 49.728;
  const bool chi_ok = counts.size() == 24 && stat <= critical;
  return {first_ok && chi_ok,
          fmt::format("P(first = heavy) {:.4f} within 0.75 +- {:.4f}: {}; chi-square {:.2f} "
                      "vs {:.2f} over {} cells",
                      freq, 4.0 * sigma, first_ok ? "yes" : "no", stat, critical,
                      counts.size())};
}

}  // namespace
}  // namespace covergrow

int main() {
  using namespace covergrow;
  Report(1, "neighbor cover mean <= 2*OPT + 4*stderr", ExpectationBound);
  Report(2, "single weighted edge mean matches 2*w_u*w_v/(w_u+w_v)", ClosedForm);
  Report(3, "cover/MIS partition invariants", StructuralInvariants);
  Report(4, "pivots = sequential MIS = parallel MIS", Equivalences);
  Report(5, "pivot STC+ and CC means <= 3*OPT + 4*stderr", PivotBound);
  Report(6, "implicit deletion = neighbor cover on reduced graph", ImplicitExplicit);
  Report(7, "mind2m/ded2/colorec means <= 2*OPT + 4*stderr", DeletionBounds);
  Report(8, "local ratio dual certificate", LocalRatioCertificates);
  Report(9, "parallel MIS rounds <= 8*log2(n)", ParallelRounds);
  Report(10, "weighted neighbor cover doubling ratio <= 2.4", RuntimeShape, /*soft=*/true);
  Report(11, "weighted shuffle distribution", ShuffleDistribution);
  std::printf("%d hard failure(s)\n", hard_failures);
  return hard_failures == 0 ? 0 : 1;
}
