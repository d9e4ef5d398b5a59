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

#include "covergrow/edge_deletion.h"

#include <algorithm>
#include <string>

#include "covergrow/error.h"

namespace covergrow {
namespace {

Permutation ShuffleItems(const std::vector<double>& weights, RandomSource& rng) {
  return weights.empty() ? Permutation() : WeightedShuffle(weights, rng);
}

void CheckOrder(const Permutation& order, std::size_t items) {
  if (order.size() != items) {
    throw InvalidInput("visiting order has " + std::to_string(order.size()) +
                       " items, instance has " + std::to_string(items));
  }
}

template <typename Items>
DeletionResult Split(const Items& items, const std::vector<bool>& keep,
                     const Permutation& order) {
  DeletionResult r;
  for (NodeId i = 0; i < items.size(); ++i) {
    if (keep[i]) {
      r.kept.push_back(i);
    } else {
      r.deleted.push_back(i);
      r.cost += items[i].weight;
    }
  }
  r.permutation = order;
  return r;
}

}  // namespace

DeletionResult MinD2M(const EdgeWeightedGraph& g, const Permutation& order) {
  CheckOrder(order, g.edge_count());
  const auto& edges = g.edges();
  std::vector<bool> matched(g.node_count(), false);
  std::vector<bool> keep(edges.size(), false);
  for (NodeId i : order) {
    const WeightedEdge& e = edges[i];
    if (matched[e.u] || matched[e.v]) continue;
    keep[i] = true;
    matched[e.u] = true;
    matched[e.v] = true;
  }
  return Split(edges, keep, order);
}

DeletionResult MinD2M(const EdgeWeightedGraph& g, RandomSource& rng) {
  return MinD2M(g, ShuffleItems(g.Weights(), rng));
}

DeletionResult Ded2(const WeightedDag& d, const Permutation& order) {
  CheckOrder(order, d.arc_count());
  const auto& arcs = d.arcs();
  std::vector<bool> is_head(d.node_count(), false);
  std::vector<bool> is_tail(d.node_count(), false);
  std::vector<bool> keep(arcs.size(), false);
  for (NodeId i : order) {
    const Arc& a = arcs[i];
    if (is_head[a.tail] || is_tail[a.head]) continue;
    keep[i] = true;
    is_tail[a.tail] = true;
    is_head[a.head] = true;
  }
  return Split(arcs, keep, order);
}

DeletionResult Ded2(const WeightedDag& d, RandomSource& rng) {
  return Ded2(d, ShuffleItems(d.Weights(), rng));
}

DeletionResult ColorEc(const EdgeColoredHypergraph& h,
                       const Permutation& order) {
  CheckOrder(order, h.hyperedge_count());
  const auto& hyperedges = h.hyperedges();
  std::vector<std::uint32_t> label(h.node_count(), 0);
  std::vector<bool> keep(hyperedges.size(), false);
  for (NodeId i : order) {
    const ColoredHyperedge& e = hyperedges[i];
    const bool satisfiable =
        std::all_of(e.members.begin(), e.members.end(), [&](NodeId u) {
          return label[u] == 0 || label[u] == e.color;
        });
    if (!satisfiable) continue;
    keep[i] = true;
    for (NodeId u : e.members) label[u] = e.color;
  }
  DeletionResult r = Split(hyperedges, keep, order);
  r.labels = std::move(label);
  return r;
}

DeletionResult ColorEc(const EdgeColoredHypergraph& h, RandomSource& rng) {
  return ColorEc(h, ShuffleItems(h.Weights(), rng));
}

void FillUnlabeled(const EdgeColoredHypergraph& h, DeletionResult& result,
                   RandomSource& rng) {
  if (!result.labels) result.labels.emplace(h.node_count(), 0);
  for (std::uint32_t& color : *result.labels) {
    if (color == 0) {
      color = 1 + static_cast<std::uint32_t>(rng.UniformBelow(h.color_count()));
    }
  }
}

double UnsatisfiedWeight(const EdgeColoredHypergraph& h,
                         const std::vector<std::uint32_t>& labels) {
  if (labels.size() != h.node_count()) {
    throw InvalidInput("label vector size does not match node count");
  }
  double total = 0.0;
  for (const ColoredHyperedge& e : h.hyperedges()) {
    const bool satisfied =
        std::all_of(e.members.begin(), e.members.end(),
                    [&](NodeId u) { return labels[u] == e.color; });
    if (!satisfied) total += e.weight;
  }
  return total;
}

bool IsMatching(const EdgeWeightedGraph& g, const std::vector<NodeId>& kept) {
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const WeightedEdge& a = edges[kept[i]];
      const WeightedEdge& b = edges[kept[j]];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
    }
  }
  return true;
}

bool IsTwoPathFree(const WeightedDag& d, const std::vector<NodeId>& kept) {
  const auto& arcs = d.arcs();
  for (NodeId e : kept) {
    for (NodeId f : kept) {
      if (arcs[e].head == arcs[f].tail) return false;
    }
  }
  return true;
}

bool IsColorConsistent(const EdgeColoredHypergraph& h,
                       const std::vector<NodeId>& kept) {
  const auto& hyperedges = h.hyperedges();
  for (std::size_t i = 0; i < kept.size(); ++i) {
    for (std::size_t j = i + 1; j < kept.size(); ++j) {
      const ColoredHyperedge& a = hyperedges[kept[i]];
      const ColoredHyperedge& b = hyperedges[kept[j]];
      if (a.color == b.color) continue;
      for (NodeId u : a.members) {
        if (std::find(b.members.begin(), b.members.end(), u) !=
            b.members.end()) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace covergrow
