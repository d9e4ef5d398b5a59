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

#include "covergrow/oracles.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "covergrow/cover.h"
#include "covergrow/edge_deletion.h"
#include "covergrow/error.h"
#include "covergrow/reductions.h"

namespace covergrow {
namespace {

void Guard(bool ok, const std::string& what) {
  if (!ok) throw GuardExceeded(what);
}

std::uint32_t Bit(int v) { return std::uint32_t{1} << v; }

// Minimum-weight vertex cover over node bitmasks. A node is either in the
// cover, excluded (then all its neighbors are in the cover), or open.
class CoverSearch {
 public:
  explicit CoverSearch(const NodeWeightedGraph& g)
      : weights_(g.weights().begin(), g.weights().end()),
        adjacency_(g.node_count(), 0) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      for (NodeId u : g.Neighbors(v)) adjacency_[v] |= Bit(u);
    }
    all_ = g.node_count() == 0 ? 0 : (~std::uint32_t{0} >> (32 - g.node_count()));
    // Taking every node is always feasible.
    best_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
    best_cover_ = all_;
  }

  void Solve() { Search(0, 0, 0.0); }
  double best() const { return best_; }
  std::uint32_t best_cover() const { return best_cover_; }

 private:
  void Search(std::uint32_t cover, std::uint32_t excluded, double cost) {
    const std::uint32_t open = all_ & ~cover & ~excluded;
    double bound = 0.0;
    std::uint32_t matched = 0;
    int branch = -1;
    int branch_degree = 0;
    for (std::uint32_t rest = open; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t nbrs = adjacency_[v] & open;
      if (nbrs == 0) continue;
      const int degree = std::popcount(nbrs);
      if (degree > branch_degree) {
        branch = v;
        branch_degree = degree;
      }
      if (matched & Bit(v)) continue;
      const std::uint32_t free = nbrs & ~matched;
      if (free != 0) {
        const int u = std::countr_zero(free);
        bound += std::min(weights_[u], weights_[v]);
        matched |= Bit(u) | Bit(v);
      }
    }
    if (branch < 0) {
      if (cost < best_) {
        best_ = cost;
        best_cover_ = cover;
      }
      return;
    }
    if (cost + bound >= best_) return;

    Search(cover | Bit(branch), excluded, cost + weights_[branch]);
    const std::uint32_t forced = adjacency_[branch] & open;
    double forced_cost = 0.0;
    for (std::uint32_t rest = forced; rest != 0; rest &= rest - 1) {
      forced_cost += weights_[std::countr_zero(rest)];
    }
    Search(cover | forced, excluded | Bit(branch), cost + forced_cost);
  }

  std::vector<double> weights_;
  std::vector<std::uint32_t> adjacency_;
  std::uint32_t all_ = 0;
  double best_ = 0.0;
  std::uint32_t best_cover_ = 0;
};

// Minimum-cardinality hitting set of 3-element masks.
class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<std::uint32_t> sets, int universe)
      : sets_(std::move(sets)),
        best_(universe),
        best_choice_(universe == 0 ? 0 : ~std::uint32_t{0} >> (32 - universe)) {}

  void Solve() { Search(0, 0); }
  int best() const { return best_; }
  std::uint32_t best_choice() const { return best_choice_; }

 private:
  void Search(std::uint32_t chosen, std::uint32_t forbidden) {
    const int count = std::popcount(chosen);
    int bound = 0;
    std::uint32_t used = 0;
    std::uint32_t branch = 0;
    for (std::uint32_t s : sets_) {
      if (s & chosen) continue;
      const std::uint32_t allowed = s & ~forbidden;
      if (allowed == 0) return;
      if (branch == 0 || std::popcount(allowed) < std::popcount(branch)) {
        branch = allowed;
      }
      if ((s & used) == 0) {
        ++bound;
        used |= s;
      }
    }
    if (branch == 0) {
      if (count < best_) {
        best_ = count;
        best_choice_ = chosen;
      }
      return;
    }
    if (count + bound >= best_) return;
    std::uint32_t tried = 0;
    for (std::uint32_t rest = branch; rest != 0; rest &= rest - 1) {
      const std::uint32_t pick = rest & -rest;
      Search(chosen | pick, forbidden | tried);
      tried |= pick;
    }
  }

  std::vector<std::uint32_t> sets_;
  int best_;
  std::uint32_t best_choice_;
};

template <typename Items>
std::vector<NodeId> Complement(const Items& items, const std::vector<bool>& keep,
                               double& cost) {
  std::vector<NodeId> deleted;
  cost = 0.0;
  for (NodeId i = 0; i < items.size(); ++i) {
    if (!keep[i]) {
      deleted.push_back(i);
      cost += items[i].weight;
    }
  }
  return deleted;
}

// Maximum-weight kept subset by include/exclude recursion. `fits(i)` asks
// whether item i is compatible with the current kept set; `toggle(i, +-1)`
// adds or removes it.
template <typename Fits, typename Toggle>
class KeepSearch {
 public:
  KeepSearch(std::vector<double> weights, Fits fits, Toggle toggle)
      : weights_(std::move(weights)),
        suffix_(weights_.size() + 1, 0.0),
        keep_(weights_.size(), false),
        best_keep_(weights_.size(), false),
        fits_(fits),
        toggle_(toggle) {
    for (std::size_t i = weights_.size(); i-- > 0;) {
      suffix_[i] = suffix_[i + 1] + weights_[i];
    }
  }

  std::vector<bool> Solve() {
    Search(0, 0.0);
    return best_keep_;
  }

 private:
  void Search(std::size_t i, double kept) {
    if (kept + suffix_[i] <= best_) return;
    if (i == weights_.size()) {
      best_ = kept;
      best_keep_ = keep_;
      return;
    }
    if (fits_(i)) {
      keep_[i] = true;
      toggle_(i, 1);
      Search(i + 1, kept + weights_[i]);
      toggle_(i, -1);
      keep_[i] = false;
    }
    Search(i + 1, kept);
  }

  std::vector<double> weights_;
  std::vector<double> suffix_;
  std::vector<bool> keep_;
  std::vector<bool> best_keep_;
  double best_ = -1.0;
  Fits fits_;
  Toggle toggle_;
};

template <typename Fits, typename Toggle>
std::vector<bool> MaxKeep(std::vector<double> weights, Fits fits,
                          Toggle toggle) {
  return KeepSearch<Fits, Toggle>(std::move(weights), fits, toggle).Solve();
}

const NodeWeightedGraph& AsGraph(const Instance& instance) {
  if (const auto* g = std::get_if<NodeWeightedGraph>(&instance)) return *g;
  throw InvalidInput("algorithm expects a node-weighted graph instance");
}

template <typename T>
const T& As(const Instance& instance, const char* kind) {
  if (const auto* x = std::get_if<T>(&instance)) return *x;
  throw InvalidInput(std::string("algorithm expects ") + kind + " instance");
}

}  // namespace

OptResult<std::vector<NodeId>> ExactVertexCover(const NodeWeightedGraph& g) {
  Guard(g.node_count() <= kMaxExactCoverNodes,
        "exact vertex cover supports at most " +
            std::to_string(kMaxExactCoverNodes) + " nodes, got " +
            std::to_string(g.node_count()));
  CoverSearch search(g);
  search.Solve();
  OptResult<std::vector<NodeId>> r;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (search.best_cover() & Bit(v)) r.witness.push_back(v);
  }
  r.opt_cost = g.TotalWeight(r.witness);
  return r;
}

OptResult<Clustering> ExactCorrelationClustering(const NodeWeightedGraph& g) {
  const std::size_t n = g.node_count();
  Guard(n <= kMaxExactCcNodes,
        "exact correlation clustering supports at most " +
            std::to_string(kMaxExactCcNodes) + " nodes, got " +
            std::to_string(n));
  OptResult<Clustering> best;
  best.opt_cost = std::numeric_limits<double>::infinity();
  Clustering current;
  current.assignment.assign(n, 0);
  // Restricted growth strings enumerate every set partition once.
  auto visit = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      const double cost =
          static_cast<double>(CorrelationClusteringCost(g, current));
      if (cost < best.opt_cost) {
        best.opt_cost = cost;
        best.witness = current;
      }
      return;
    }
    for (std::uint32_t k = 1; k <= current.cluster_count + 1; ++k) {
      const std::uint32_t saved = current.cluster_count;
      current.assignment[i] = k;
      current.cluster_count = std::max(saved, k);
      self(self, i + 1);
      current.cluster_count = saved;
    }
    current.assignment[i] = 0;
  };
  visit(visit, 0);
  return best;
}

OptResult<StcLabeling> ExactMinStc(const NodeWeightedGraph& g) {
  Guard(g.node_count() <= kMaxExactStcNodes,
        "exact MinSTC+ supports at most " + std::to_string(kMaxExactStcNodes) +
            " nodes, got " + std::to_string(g.node_count()));
  const Hypergraph3 h = OpenWedgeHypergraph(g);
  auto local = [&](std::uint64_t pair) {
    return static_cast<int>(
        std::lower_bound(h.active_nodes.begin(), h.active_nodes.end(), pair) -
        h.active_nodes.begin());
  };
  std::vector<std::uint32_t> sets;
  for (const auto& e : h.hyperedges) {
    sets.push_back(Bit(local(e[0])) | Bit(local(e[1])) | Bit(local(e[2])));
  }
  HittingSetSearch search(std::move(sets),
                          static_cast<int>(h.active_nodes.size()));
  search.Solve();

  OptResult<StcLabeling> r;
  for (std::size_t i = 0; i < h.active_nodes.size(); ++i) {
    if (!(search.best_choice() & Bit(static_cast<int>(i)))) continue;
    const Edge pair = h.pair_index.Pair(h.active_nodes[i]);
    (g.HasEdge(pair.u, pair.v) ? r.witness.weak_edges : r.witness.new_edges)
        .push_back(pair);
  }
  r.opt_cost = static_cast<double>(r.witness.cost());
  return r;
}

OptResult<std::vector<NodeId>> ExactMinD2M(const EdgeWeightedGraph& g) {
  Guard(g.edge_count() <= kMaxExactDeletionItems,
        "exact MinD2M supports at most " +
            std::to_string(kMaxExactDeletionItems) + " edges, got " +
            std::to_string(g.edge_count()));
  const auto& edges = g.edges();
  std::vector<bool> matched(g.node_count(), false);
  const std::vector<bool> keep = MaxKeep(
      g.Weights(),
      [&](std::size_t i) { return !matched[edges[i].u] && !matched[edges[i].v]; },
      [&](std::size_t i, int delta) {
        matched[edges[i].u] = matched[edges[i].v] = delta > 0;
      });
  OptResult<std::vector<NodeId>> r;
  r.witness = Complement(edges, keep, r.opt_cost);
  return r;
}

OptResult<std::vector<NodeId>> ExactDed2(const WeightedDag& d) {
  Guard(d.arc_count() <= kMaxExactDeletionItems,
        "exact DED-2 supports at most " +
            std::to_string(kMaxExactDeletionItems) + " arcs, got " +
            std::to_string(d.arc_count()));
  const auto& arcs = d.arcs();
  std::vector<int> as_head(d.node_count(), 0);
  std::vector<int> as_tail(d.node_count(), 0);
  const std::vector<bool> keep = MaxKeep(
      d.Weights(),
      [&](std::size_t i) {
        return as_head[arcs[i].tail] == 0 && as_tail[arcs[i].head] == 0;
      },
      [&](std::size_t i, int delta) {
        as_tail[arcs[i].tail] += delta;
        as_head[arcs[i].head] += delta;
      });
  OptResult<std::vector<NodeId>> r;
  r.witness = Complement(arcs, keep, r.opt_cost);
  return r;
}

OptResult<std::vector<std::uint32_t>> ExactColorEc(
    const EdgeColoredHypergraph& h) {
  const std::size_t n = h.node_count();
  const std::uint32_t k = h.color_count();
  std::uint64_t labelings = 1;
  for (std::size_t i = 0; i < n; ++i) {
    labelings *= k;
    Guard(labelings <= kMaxExactColorEcLabelings,
          "exact ColorEC supports at most " +
              std::to_string(kMaxExactColorEcLabelings) +
              " labelings (k^n), instance has " + std::to_string(k) + "^" +
              std::to_string(n));
  }
  std::vector<std::uint32_t> labels(n, 1);
  OptResult<std::vector<std::uint32_t>> best;
  best.opt_cost = std::numeric_limits<double>::infinity();
  for (std::uint64_t step = 0; step < labelings; ++step) {
    const double cost = UnsatisfiedWeight(h, labels);
    if (cost < best.opt_cost) {
      best.opt_cost = cost;
      best.witness = labels;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] < k) {
        ++labels[i];
        break;
      }
      labels[i] = 1;
    }
  }
  return best;
}

RatioAlgorithm ParseRatioAlgorithm(std::string_view name) {
  for (RatioAlgorithm a :
       {RatioAlgorithm::kNeighborCover, RatioAlgorithm::kGreedyMis,
        RatioAlgorithm::kPitt, RatioAlgorithm::kPivotCc,
        RatioAlgorithm::kPivotStc, RatioAlgorithm::kMinD2M,
        RatioAlgorithm::kDed2, RatioAlgorithm::kColorEc}) {
    if (RatioAlgorithmName(a) == name) return a;
  }
  throw InvalidInput("unknown randomized algorithm '" + std::string(name) +
                     "'");
}

std::string_view RatioAlgorithmName(RatioAlgorithm algorithm) {
  switch (algorithm) {
    case RatioAlgorithm::kNeighborCover: return "neighbor";
    case RatioAlgorithm::kGreedyMis: return "greedy-mis";
    case RatioAlgorithm::kPitt: return "pitt";
    case RatioAlgorithm::kPivotCc: return "pivot-cc";
    case RatioAlgorithm::kPivotStc: return "pivot-stc";
    case RatioAlgorithm::kMinD2M: return "mind2m";
    case RatioAlgorithm::kDed2: return "ded2";
    case RatioAlgorithm::kColorEc: return "colorec";
  }
  return "unknown";
}

double ApproximationBound(RatioAlgorithm algorithm) {
  return algorithm == RatioAlgorithm::kPivotCc ||
                 algorithm == RatioAlgorithm::kPivotStc
             ? 3.0
             : 2.0;
}

double SampleCost(RatioAlgorithm algorithm, const Instance& instance,
                  RandomSource& rng) {
  switch (algorithm) {
    case RatioAlgorithm::kNeighborCover:
      return NeighborCoverRandomized(AsGraph(instance), rng).cost;
    case RatioAlgorithm::kGreedyMis:
      return GreedyMis(AsGraph(instance), rng).cost;
    case RatioAlgorithm::kPitt:
      return PittVc(AsGraph(instance), rng).cost;
    case RatioAlgorithm::kPivotCc: {
      const NodeWeightedGraph& g = AsGraph(instance);
      return static_cast<double>(
          CorrelationClusteringCost(g, RandomPivot(g, rng)));
    }
    case RatioAlgorithm::kPivotStc: {
      const NodeWeightedGraph& g = AsGraph(instance);
      return static_cast<double>(
          StcFromClustering(g, RandomPivot(g, rng)).cost());
    }
    case RatioAlgorithm::kMinD2M:
      return MinD2M(As<EdgeWeightedGraph>(instance, "an edge-weighted graph"),
                    rng)
          .cost;
    case RatioAlgorithm::kDed2:
      return Ded2(As<WeightedDag>(instance, "a DAG"), rng).cost;
    case RatioAlgorithm::kColorEc:
      return ColorEc(As<EdgeColoredHypergraph>(instance, "a colored hypergraph"),
                     rng)
          .cost;
  }
  throw InvalidInput("unknown algorithm");
}

double OptimalCost(RatioAlgorithm algorithm, const Instance& instance) {
  switch (algorithm) {
    case RatioAlgorithm::kNeighborCover:
    case RatioAlgorithm::kGreedyMis:
    case RatioAlgorithm::kPitt:
      return ExactVertexCover(AsGraph(instance)).opt_cost;
    case RatioAlgorithm::kPivotCc:
      return ExactCorrelationClustering(AsGraph(instance)).opt_cost;
    case RatioAlgorithm::kPivotStc:
      return ExactMinStc(AsGraph(instance)).opt_cost;
    case RatioAlgorithm::kMinD2M:
      return ExactMinD2M(As<EdgeWeightedGraph>(instance, "an edge-weighted graph"))
          .opt_cost;
    case RatioAlgorithm::kDed2:
      return ExactDed2(As<WeightedDag>(instance, "a DAG")).opt_cost;
    case RatioAlgorithm::kColorEc:
      return ExactColorEc(
                 As<EdgeColoredHypergraph>(instance, "a colored hypergraph"))
          .opt_cost;
  }
  throw InvalidInput("unknown algorithm");
}

SampleStats Summarize(std::span<const double> samples) {
  if (samples.size() < 2) {
    throw InvalidInput("need at least 2 samples for a standard error");
  }
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double squares = 0.0;
  for (double x : samples) squares += (x - mean) * (x - mean);
  return {mean, std::sqrt(squares / (n - 1)) / std::sqrt(n)};
}

bool RatioEstimate::Passes() const {
  return mean <= bound * opt + 4.0 * std_error + 1e-9;
}

RatioEstimate EstimateRatio(RatioAlgorithm algorithm, const Instance& instance,
                            std::size_t runs, std::uint64_t seed) {
  if (runs < kMinRatioRuns) {
    throw InvalidInput("ratio estimation needs at least " +
                       std::to_string(kMinRatioRuns) + " runs");
  }
  RatioEstimate est;
  // The oracle runs first so an oversized instance fails before sampling.
  est.opt = OptimalCost(algorithm, instance);
  est.bound = ApproximationBound(algorithm);
  est.runs = runs;
  std::vector<double> costs(runs);
  for (std::size_t i = 0; i < runs; ++i) {
    RandomSource rng(seed + i);
    costs[i] = SampleCost(algorithm, instance, rng);
  }
  const SampleStats stats = Summarize(costs);
  est.mean = stats.mean;
  est.std_error = stats.std_error;
  return est;
}

}  // namespace covergrow
