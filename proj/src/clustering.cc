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

#include "covergrow/clustering.h"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "covergrow/error.h"
#include "covergrow/reductions.h"

namespace covergrow {
namespace {

void CheckClustering(const NodeWeightedGraph& g, const Clustering& c) {
  if (c.assignment.size() != g.node_count()) {
    throw InvalidInput("clustering assigns " +
                       std::to_string(c.assignment.size()) +
                       " nodes, graph has " + std::to_string(g.node_count()));
  }
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const std::uint32_t k = c.assignment[v];
    if (k == 0 || k > c.cluster_count) {
      throw InvalidInput("node " + std::to_string(v) +
                         (k == 0 ? " is unassigned"
                                 : " has cluster index out of range"));
    }
  }
}

std::vector<std::vector<NodeId>> Members(const Clustering& c) {
  std::vector<std::vector<NodeId>> members(c.cluster_count + 1);
  for (NodeId v = 0; v < c.assignment.size(); ++v) {
    members[c.assignment[v]].push_back(v);
  }
  return members;
}

std::uint64_t PairKey(NodeId u, NodeId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

Clustering Pivot(const NodeWeightedGraph& g, const Permutation& perm) {
  if (perm.size() != g.node_count()) {
    throw InvalidInput("permutation size does not match node count");
  }
  Clustering c;
  c.assignment.assign(g.node_count(), 0);
  for (NodeId v : perm) {
    if (c.assignment[v] != 0) continue;
    const std::uint32_t cluster = ++c.cluster_count;
    c.assignment[v] = cluster;
    c.pivots.push_back(v);
    for (NodeId u : g.Neighbors(v)) {
      if (c.assignment[u] == 0) c.assignment[u] = cluster;
    }
  }
  return c;
}

Clustering RandomPivot(const NodeWeightedGraph& g, RandomSource& rng) {
  if (g.node_count() == 0) return Pivot(g, Permutation());
  return Pivot(g, UniformShuffle(g.node_count(), rng));
}

std::uint64_t CorrelationClusteringCost(const NodeWeightedGraph& g,
                                        const Clustering& c) {
  CheckClustering(g, c);
  std::uint64_t cut = 0;
  std::uint64_t internal = 0;
  for (const Edge& e : g.Edges()) {
    (c.assignment[e.u] == c.assignment[e.v] ? internal : cut) += 1;
  }
  std::uint64_t pairs = 0;
  for (const auto& members : Members(c)) {
    const std::uint64_t s = members.size();
    pairs += s * (s - (s > 0)) / 2;
  }
  return cut + (pairs - internal);
}

StcLabeling StcFromClustering(const NodeWeightedGraph& g, const Clustering& c) {
  CheckClustering(g, c);
  StcLabeling lab;
  for (const Edge& e : g.Edges()) {
    if (c.assignment[e.u] != c.assignment[e.v]) lab.weak_edges.push_back(e);
  }
  for (const auto& members : Members(c)) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!g.HasEdge(members[i], members[j])) {
          lab.new_edges.push_back({members[i], members[j]});
        }
      }
    }
  }
  std::sort(lab.new_edges.begin(), lab.new_edges.end());
  return lab;
}

bool ValidateStc(const NodeWeightedGraph& g, const StcLabeling& labeling) {
  std::unordered_set<std::uint64_t> weak;
  std::unordered_set<std::uint64_t> inserted;
  auto check_pair = [&](const Edge& e) {
    if (e.u == e.v || e.u >= g.node_count() || e.v >= g.node_count()) {
      throw InvalidInput("malformed pair (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ")");
    }
  };
  for (const Edge& e : labeling.weak_edges) {
    check_pair(e);
    if (!g.HasEdge(e.u, e.v)) {
      throw InvalidInput("weak pair (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ") is not an edge");
    }
    weak.insert(PairKey(e.u, e.v));
  }
  for (const Edge& e : labeling.new_edges) {
    check_pair(e);
    if (g.HasEdge(e.u, e.v)) {
      throw InvalidInput("new pair (" + std::to_string(e.u) + ", " +
                         std::to_string(e.v) + ") is already an edge");
    }
    inserted.insert(PairKey(e.u, e.v));
  }
  for (const OpenWedge& w : EnumerateOpenWedges(g)) {
    if (!weak.contains(PairKey(w.center, w.a)) &&
        !weak.contains(PairKey(w.center, w.b)) &&
        !inserted.contains(PairKey(w.a, w.b))) {
      return false;
    }
  }
  return true;
}

}  // namespace covergrow
