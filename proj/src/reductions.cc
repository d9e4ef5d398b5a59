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

#include "covergrow/reductions.h"

#include <algorithm>

namespace covergrow {
namespace {

// Incidence lists: for every node of the original structure, the items
// touching it.
using Incidence = std::vector<std::vector<NodeId>>;

void ConnectAllPairs(const std::vector<NodeId>& items, std::vector<Edge>& out) {
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = i + 1; j < items.size(); ++j) {
      out.push_back({items[i], items[j]});
    }
  }
}

}  // namespace

NodeWeightedGraph LineGraph(const EdgeWeightedGraph& g) {
  Incidence incident(g.node_count());
  const auto& edges = g.edges();
  for (NodeId i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<Edge> adjacent;
  // Simple graph: two distinct edges share at most one endpoint, so no
  // pair is emitted twice.
  for (const auto& items : incident) ConnectAllPairs(items, adjacent);
  return NodeWeightedGraph::Build(edges.size(), adjacent, g.Weights());
}

NodeWeightedGraph Ded2ConflictGraph(const WeightedDag& d) {
  Incidence in_arcs(d.node_count());
  Incidence out_arcs(d.node_count());
  const auto& arcs = d.arcs();
  for (NodeId i = 0; i < arcs.size(); ++i) {
    in_arcs[arcs[i].head].push_back(i);
    out_arcs[arcs[i].tail].push_back(i);
  }
  std::vector<Edge> adjacent;
  for (std::size_t x = 0; x < d.node_count(); ++x) {
    for (NodeId e : in_arcs[x]) {
      for (NodeId f : out_arcs[x]) adjacent.push_back({e, f});
    }
  }
  return NodeWeightedGraph::Build(arcs.size(), adjacent, d.Weights());
}

NodeWeightedGraph ColorEcConflictGraph(const EdgeColoredHypergraph& h) {
  Incidence incident(h.node_count());
  const auto& hyperedges = h.hyperedges();
  for (NodeId i = 0; i < hyperedges.size(); ++i) {
    for (NodeId v : hyperedges[i].members) incident[v].push_back(i);
  }
  std::vector<Edge> adjacent;
  for (const auto& items : incident) {
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        if (hyperedges[items[i]].color != hyperedges[items[j]].color) {
          adjacent.push_back({items[i], items[j]});
        }
      }
    }
  }
  // Hyperedges sharing several nodes emit the same pair more than once;
  // Build merges them.
  return NodeWeightedGraph::Build(hyperedges.size(), adjacent, h.Weights());
}

std::vector<OpenWedge> EnumerateOpenWedges(const NodeWeightedGraph& g) {
  std::vector<OpenWedge> wedges;
  for (NodeId c = 0; c < g.node_count(); ++c) {
    const auto nbrs = g.Neighbors(c);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        if (!g.HasEdge(nbrs[i], nbrs[j])) {
          wedges.push_back({c, nbrs[i], nbrs[j]});
        }
      }
    }
  }
  return wedges;
}

Hypergraph3 OpenWedgeHypergraph(const NodeWeightedGraph& g) {
  Hypergraph3 h;
  h.pair_index = PairIndex(g.node_count());
  for (const OpenWedge& w : EnumerateOpenWedges(g)) {
    std::array<std::uint64_t, 3> members = {h.pair_index.Id(w.center, w.a),
                                            h.pair_index.Id(w.center, w.b),
                                            h.pair_index.Id(w.a, w.b)};
    std::sort(members.begin(), members.end());
    h.hyperedges.push_back(members);
    h.active_nodes.insert(h.active_nodes.end(), members.begin(), members.end());
  }
  std::sort(h.active_nodes.begin(), h.active_nodes.end());
  h.active_nodes.erase(std::unique(h.active_nodes.begin(), h.active_nodes.end()),
                       h.active_nodes.end());
  return h;
}

}  // namespace covergrow
