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

#include "covergrow/cover.h"

#include <algorithm>
#include <cstdint>
#include <string>

#include "covergrow/error.h"

namespace covergrow {
namespace {

enum class State : std::uint8_t { kUndecided, kIndependent, kCovered };

void CheckPermutation(const NodeWeightedGraph& g, const Permutation& perm) {
  if (perm.size() != g.node_count()) {
    throw InvalidInput("permutation has " + std::to_string(perm.size()) +
                       " items, graph has " + std::to_string(g.node_count()) +
                       " nodes");
  }
}

void CheckEdgeOrder(const NodeWeightedGraph& g, std::span<const Edge> order) {
  if (order.size() != g.edge_count()) {
    throw InvalidInput("edge order lists " + std::to_string(order.size()) +
                       " edges, graph has " + std::to_string(g.edge_count()));
  }
  std::vector<Edge> sorted;
  sorted.reserve(order.size());
  for (const Edge& e : order) {
    if (!g.HasEdge(e.u, e.v)) {
      throw InvalidInput("edge order contains non-edge (" +
                         std::to_string(e.u) + ", " + std::to_string(e.v) +
                         ")");
    }
    sorted.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InvalidInput("edge order repeats an edge");
  }
}

// Fills cover (membership true) and independent (the rest), both ascending.
CoverResult Collect(const NodeWeightedGraph& g, const std::vector<bool>& in_cover,
                    std::string algorithm) {
  CoverResult r;
  r.algorithm = std::move(algorithm);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    (in_cover[v] ? r.cover : r.independent).push_back(v);
  }
  r.cost = g.TotalWeight(r.cover);
  return r;
}

void CheckIds(const NodeWeightedGraph& g, std::span<const NodeId> nodes) {
  for (NodeId v : nodes) {
    if (v >= g.node_count()) {
      throw InvalidInput("node id " + std::to_string(v) + " out of range");
    }
  }
}

std::vector<bool> Membership(const NodeWeightedGraph& g,
                             std::span<const NodeId> nodes) {
  CheckIds(g, nodes);
  std::vector<bool> member(g.node_count(), false);
  for (NodeId v : nodes) member[v] = true;
  return member;
}

}  // namespace

CoverResult NeighborCover(const NodeWeightedGraph& g, const Permutation& perm) {
  CheckPermutation(g, perm);
  std::vector<State> state(g.node_count(), State::kUndecided);
  for (NodeId v : perm) {
    const auto nbrs = g.Neighbors(v);
    const bool dominated = std::any_of(nbrs.begin(), nbrs.end(), [&](NodeId u) {
      return state[u] == State::kIndependent;
    });
    state[v] = dominated ? State::kCovered : State::kIndependent;
  }
  std::vector<bool> in_cover(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    in_cover[v] = state[v] == State::kCovered;
  }
  CoverResult r = Collect(g, in_cover, "neighbor");
  r.permutation = perm;
  return r;
}

CoverResult NeighborCoverRandomized(const NodeWeightedGraph& g,
                                    RandomSource& rng) {
  if (g.node_count() == 0) return NeighborCover(g, Permutation());
  return NeighborCover(g, WeightedShuffle(g.weights(), rng));
}

CoverResult GreedyMis(const NodeWeightedGraph& g, RandomSource& rng) {
  CoverResult r = g.node_count() == 0
                      ? NeighborCover(g, Permutation())
                      : NeighborCover(g, UniformShuffle(g.node_count(), rng));
  r.algorithm = "greedy-mis";
  r.weights_ignored = !g.HasUnitWeights();
  return r;
}

CoverResult MatchingVc(const NodeWeightedGraph& g,
                       std::span<const Edge> edge_order) {
  CheckEdgeOrder(g, edge_order);
  std::vector<bool> in_cover(g.node_count(), false);
  for (const Edge& e : edge_order) {
    if (!in_cover[e.u] && !in_cover[e.v]) {
      in_cover[e.u] = true;
      in_cover[e.v] = true;
    }
  }
  CoverResult r = Collect(g, in_cover, "matching");
  r.weights_ignored = !g.HasUnitWeights();
  return r;
}

CoverResult MatchingVc(const NodeWeightedGraph& g) {
  return MatchingVc(g, g.Edges());
}

CoverResult PittVc(const NodeWeightedGraph& g, std::span<const Edge> edge_order,
                   RandomSource& rng) {
  CheckEdgeOrder(g, edge_order);
  std::vector<bool> in_cover(g.node_count(), false);
  for (const Edge& e : edge_order) {
    if (in_cover[e.u] || in_cover[e.v]) continue;
    const double wu = g.weight(e.u);
    const double wv = g.weight(e.v);
    const double take_u = wu + wv > 0.0 ? wv / (wu + wv) : 0.5;
    in_cover[rng.NextDouble() < take_u ? e.u : e.v] = true;
  }
  return Collect(g, in_cover, "pitt");
}

CoverResult PittVc(const NodeWeightedGraph& g, RandomSource& rng) {
  return PittVc(g, g.Edges(), rng);
}

LocalRatioResult LocalRatioVc(const NodeWeightedGraph& g,
                              std::span<const Edge> edge_order) {
  CheckEdgeOrder(g, edge_order);
  std::vector<double> residual(g.weights().begin(), g.weights().end());
  DualCertificate certificate;
  certificate.values.reserve(edge_order.size());
  for (const Edge& e : edge_order) {
    const double m = std::min(residual[e.u], residual[e.v]);
    // The minimum endpoint reaches exactly zero: x - x == 0 in IEEE.
    residual[e.u] -= m;
    residual[e.v] -= m;
    certificate.values.push_back({e, m});
    certificate.total += m;
  }
  std::vector<bool> in_cover(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) in_cover[v] = residual[v] == 0.0;
  return {Collect(g, in_cover, "local-ratio"), std::move(certificate)};
}

LocalRatioResult LocalRatioVc(const NodeWeightedGraph& g) {
  return LocalRatioVc(g, g.Edges());
}

ParallelMisResult ParallelGreedyMis(const NodeWeightedGraph& g,
                                    const Permutation& perm) {
  CheckPermutation(g, perm);
  const std::vector<std::size_t> rank = perm.Ranks();
  std::vector<State> state(g.node_count(), State::kUndecided);
  std::vector<NodeId> remaining(perm.begin(), perm.end());
  std::vector<NodeId> winners;
  std::size_t rounds = 0;

  while (!remaining.empty()) {
    ++rounds;
    // Candidates are judged against the state left by the previous round.
    winners.clear();
    for (NodeId v : remaining) {
      const auto nbrs = g.Neighbors(v);
      const bool first = std::none_of(nbrs.begin(), nbrs.end(), [&](NodeId u) {
        return state[u] == State::kUndecided && rank[u] < rank[v];
      });
      if (first) winners.push_back(v);
    }
    for (NodeId v : winners) state[v] = State::kIndependent;
    for (NodeId v : winners) {
      for (NodeId u : g.Neighbors(v)) {
        if (state[u] == State::kUndecided) state[u] = State::kCovered;
      }
    }
    std::erase_if(remaining,
                  [&](NodeId v) { return state[v] != State::kUndecided; });
  }

  std::vector<bool> in_cover(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    in_cover[v] = state[v] == State::kCovered;
  }
  ParallelMisResult out{Collect(g, in_cover, "parallel-mis"), rounds};
  out.result.permutation = perm;
  return out;
}

bool VerifyCover(const NodeWeightedGraph& g, std::span<const NodeId> nodes) {
  const std::vector<bool> member = Membership(g, nodes);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (member[u]) continue;
    for (NodeId v : g.Neighbors(u)) {
      if (!member[v]) return false;
    }
  }
  return true;
}

bool VerifyIndependent(const NodeWeightedGraph& g,
                       std::span<const NodeId> nodes) {
  const std::vector<bool> member = Membership(g, nodes);
  for (NodeId u : nodes) {
    for (NodeId v : g.Neighbors(u)) {
      if (member[v]) return false;
    }
  }
  return true;
}

bool VerifyMis(const NodeWeightedGraph& g, std::span<const NodeId> nodes) {
  if (!VerifyIndependent(g, nodes)) return false;
  const std::vector<bool> member = Membership(g, nodes);
  for (NodeId u = 0; u < g.node_count(); ++u) {
    if (member[u]) continue;
    const auto nbrs = g.Neighbors(u);
    if (std::none_of(nbrs.begin(), nbrs.end(),
                     [&](NodeId v) { return member[v]; })) {
      return false;
    }
  }
  return true;
}

bool VerifyCertificate(const NodeWeightedGraph& g,
                       const DualCertificate& certificate) {
  std::vector<double> load(g.node_count(), 0.0);
  double total = 0.0;
  for (const EdgeValue& ev : certificate.values) {
    if (!(ev.value >= 0.0) || !g.HasEdge(ev.edge.u, ev.edge.v)) return false;
    load[ev.edge.u] += ev.value;
    load[ev.edge.v] += ev.value;
    total += ev.value;
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (load[v] > g.weight(v)) return false;
  }
  return total == certificate.total;
}

}  // namespace covergrow
