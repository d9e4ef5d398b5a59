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

#include "covergrow/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "covergrow/error.h"

namespace covergrow {
namespace {

void CheckWeight(double w, const char* what) {
  if (!std::isfinite(w) || w < 0.0) {
    throw InvalidInput(std::string(what) + " weight must be finite and >= 0, got " +
                       std::to_string(w));
  }
}

void CheckNode(std::size_t node_count, NodeId v) {
  if (v >= node_count) {
    throw InvalidInput("node id " + std::to_string(v) + " out of range [0, " +
                       std::to_string(node_count) + ")");
  }
}

void CheckNodeCount(std::size_t node_count) {
  if (node_count > std::size_t{0xffffffffu}) {
    throw InvalidInput("node count exceeds 32-bit id range");
  }
}

std::vector<double> Collect(auto const& items) {
  std::vector<double> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(item.weight);
  return out;
}

}  // namespace

NodeWeightedGraph NodeWeightedGraph::Build(
    std::size_t node_count, std::span<const Edge> edges,
    std::optional<std::vector<double>> weights) {
  CheckNodeCount(node_count);
  NodeWeightedGraph g;
  if (weights.has_value()) {
    if (weights->size() != node_count) {
      throw InvalidInput("expected " + std::to_string(node_count) +
                         " node weights, got " +
                         std::to_string(weights->size()));
    }
    for (double w : *weights) CheckWeight(w, "node");
    g.weights_ = std::move(*weights);
  } else {
    g.weights_.assign(node_count, 1.0);
  }

  std::vector<Edge> sorted;
  sorted.reserve(edges.size());
  for (const Edge& e : edges) {
    CheckNode(node_count, e.u);
    CheckNode(node_count, e.v);
    if (e.u == e.v) {
      throw InvalidInput("self-loop at node " + std::to_string(e.u));
    }
    sorted.push_back(e.u < e.v ? e : Edge{e.v, e.u});
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  g.offsets_.assign(node_count + 1, 0);
  for (const Edge& e : sorted) {
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.neighbors_.resize(2 * sorted.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  // Sorted (u, v) order fills every row in increasing neighbor order: the
  // entries below the row id arrive (as v) before those above it (as u).
  for (const Edge& e : sorted) {
    g.neighbors_[cursor[e.v]++] = e.u;
  }
  for (const Edge& e : sorted) {
    g.neighbors_[cursor[e.u]++] = e.v;
  }
  return g;
}

NodeWeightedGraph NodeWeightedGraph::FromCsr(std::vector<std::size_t> offsets,
                                             std::vector<NodeId> neighbors,
                                             std::vector<double> weights) {
  const std::size_t n = weights.size();
  CheckNodeCount(n);
  if (offsets.size() != n + 1 || offsets.front() != 0 ||
      offsets.back() != neighbors.size()) {
    throw InvalidInput("CSR offsets do not match node and neighbor counts");
  }
  for (double w : weights) CheckWeight(w, "node");
  for (std::size_t v = 0; v < n; ++v) {
    if (offsets[v] > offsets[v + 1]) {
      throw InvalidInput("CSR offsets must be nondecreasing");
    }
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      CheckNode(n, neighbors[i]);
      if (neighbors[i] == v) {
        throw InvalidInput("self-loop at node " + std::to_string(v));
      }
      if (i > offsets[v] && neighbors[i - 1] >= neighbors[i]) {
        throw InvalidInput("CSR row " + std::to_string(v) +
                           " is not strictly increasing");
      }
    }
  }
  // Symmetry: scanning rows in increasing order, the entries (u, v) with
  // u > v reach row u in increasing v, so a per-row cursor must match them
  // exactly against the lower part of row u.
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      const NodeId u = neighbors[i];
      if (u < v) continue;
      if (cursor[u] == offsets[u + 1] || neighbors[cursor[u]] != v) {
        throw InvalidInput("CSR adjacency is not symmetric at edge (" +
                           std::to_string(v) + ", " + std::to_string(u) + ")");
      }
      ++cursor[u];
    }
  }
  for (std::size_t u = 0; u < n; ++u) {
    if (cursor[u] != offsets[u + 1] && neighbors[cursor[u]] < u) {
      throw InvalidInput("CSR adjacency is not symmetric at node " +
                         std::to_string(u));
    }
  }
  NodeWeightedGraph g;
  g.offsets_ = std::move(offsets);
  g.neighbors_ = std::move(neighbors);
  g.weights_ = std::move(weights);
  return g;
}

bool NodeWeightedGraph::HasUnitWeights() const {
  return std::all_of(weights_.begin(), weights_.end(),
                     [](double w) { return w == 1.0; });
}

bool NodeWeightedGraph::HasEdge(NodeId u, NodeId v) const {
  if (u >= node_count() || v >= node_count()) return false;
  if (Degree(u) > Degree(v)) std::swap(u, v);
  const auto row = Neighbors(u);
  return std::binary_search(row.begin(), row.end(), v);
}

std::vector<Edge> NodeWeightedGraph::Edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (NodeId u = 0; u < node_count(); ++u) {
    for (NodeId v : Neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

double NodeWeightedGraph::TotalWeight(std::span<const NodeId> nodes) const {
  double total = 0.0;
  for (NodeId v : nodes) total += weights_[v];
  return total;
}

NodeWeightedGraph NodeWeightedGraph::WithWeights(
    std::vector<double> weights) const {
  if (weights.size() != node_count()) {
    throw InvalidInput("expected " + std::to_string(node_count()) +
                       " node weights, got " + std::to_string(weights.size()));
  }
  for (double w : weights) CheckWeight(w, "node");
  NodeWeightedGraph g = *this;
  g.weights_ = std::move(weights);
  return g;
}

EdgeWeightedGraph::EdgeWeightedGraph(std::size_t node_count,
                                     std::vector<WeightedEdge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
  CheckNodeCount(node_count);
  std::vector<Edge> keys;
  keys.reserve(edges_.size());
  for (WeightedEdge& e : edges_) {
    CheckNode(node_count, e.u);
    CheckNode(node_count, e.v);
    if (e.u == e.v) {
      throw InvalidInput("self-loop at node " + std::to_string(e.u));
    }
    CheckWeight(e.weight, "edge");
    if (e.u > e.v) std::swap(e.u, e.v);
    keys.push_back({e.u, e.v});
  }
  std::sort(keys.begin(), keys.end());
  const auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) {
    throw InvalidInput("duplicate edge (" + std::to_string(dup->u) + ", " +
                       std::to_string(dup->v) + ")");
  }
}

std::vector<double> EdgeWeightedGraph::Weights() const {
  return Collect(edges_);
}

WeightedDag::WeightedDag(std::size_t node_count, std::vector<Arc> arcs,
                         bool check_acyclic)
    : node_count_(node_count), arcs_(std::move(arcs)) {
  CheckNodeCount(node_count);
  std::vector<Edge> keys;
  keys.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    CheckNode(node_count, a.tail);
    CheckNode(node_count, a.head);
    if (a.tail == a.head) {
      throw InvalidInput("self-arc at node " + std::to_string(a.tail));
    }
    CheckWeight(a.weight, "arc");
    keys.push_back({a.tail, a.head});
  }
  std::sort(keys.begin(), keys.end());
  const auto dup = std::adjacent_find(keys.begin(), keys.end());
  if (dup != keys.end()) {
    throw InvalidInput("duplicate arc " + std::to_string(dup->u) + " -> " +
                       std::to_string(dup->v));
  }
  if (check_acyclic && !IsAcyclic(node_count, arcs_)) {
    throw InvalidInput("arc set contains a directed cycle");
  }
}

std::vector<double> WeightedDag::Weights() const { return Collect(arcs_); }

bool WeightedDag::IsAcyclic(std::size_t node_count, std::span<const Arc> arcs) {
  // Kahn's algorithm.
  std::vector<std::size_t> indegree(node_count, 0);
  std::vector<std::size_t> offsets(node_count + 1, 0);
  for (const Arc& a : arcs) {
    ++indegree[a.head];
    ++offsets[a.tail + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<NodeId> heads(arcs.size());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Arc& a : arcs) heads[cursor[a.tail]++] = a.head;

  std::vector<NodeId> ready;
  for (NodeId v = 0; v < node_count; ++v) {
    if (indegree[v] == 0) ready.push_back(v);
  }
  std::size_t visited = 0;
  while (!ready.empty()) {
    const NodeId v = ready.back();
    ready.pop_back();
    ++visited;
    for (std::size_t i = offsets[v]; i < offsets[v + 1]; ++i) {
      if (--indegree[heads[i]] == 0) ready.push_back(heads[i]);
    }
  }
  return visited == node_count;
}

EdgeColoredHypergraph::EdgeColoredHypergraph(
    std::size_t node_count, std::uint32_t color_count,
    std::vector<ColoredHyperedge> hyperedges)
    : node_count_(node_count),
      color_count_(color_count),
      hyperedges_(std::move(hyperedges)) {
  CheckNodeCount(node_count);
  if (color_count == 0) throw InvalidInput("color count must be >= 1");
  std::vector<NodeId> scratch;
  for (std::size_t i = 0; i < hyperedges_.size(); ++i) {
    const ColoredHyperedge& e = hyperedges_[i];
    const std::string where = "hyperedge " + std::to_string(i);
    if (e.members.empty()) throw InvalidInput(where + " is empty");
    if (e.color < 1 || e.color > color_count) {
      throw InvalidInput(where + " has color " + std::to_string(e.color) +
                         " outside 1.." + std::to_string(color_count));
    }
    CheckWeight(e.weight, "hyperedge");
    for (NodeId v : e.members) CheckNode(node_count, v);
    scratch = e.members;
    std::sort(scratch.begin(), scratch.end());
    if (std::adjacent_find(scratch.begin(), scratch.end()) != scratch.end()) {
      throw InvalidInput(where + " repeats a member node");
    }
  }
}

std::vector<double> EdgeColoredHypergraph::Weights() const {
  return Collect(hyperedges_);
}

std::uint64_t PairIndex::Id(NodeId i, NodeId j) const {
  if (i == j || i >= node_count_ || j >= node_count_) {
    throw InvalidInput("invalid node pair {" + std::to_string(i) + ", " +
                       std::to_string(j) + "}");
  }
  if (i > j) std::swap(i, j);
  const std::uint64_t n = node_count_;
  const std::uint64_t a = i;
  // Pairs whose smaller element is below i, then the offset within row i.
  return a * (2 * n - a - 1) / 2 + (j - a - 1);
}

Edge PairIndex::Pair(std::uint64_t id) const {
  if (id >= pair_count()) {
    throw InvalidInput("pair id " + std::to_string(id) + " out of range");
  }
  const std::uint64_t n = node_count_;
  // Largest i with start(i) <= id, where start(i) = i(2n - i - 1)/2.
  const double nd = static_cast<double>(n);
  auto start = [n](std::uint64_t i) { return i * (2 * n - i - 1) / 2; };
  auto i = static_cast<std::uint64_t>(std::floor(
      ((2 * nd - 1) - std::sqrt((2 * nd - 1) * (2 * nd - 1) - 8.0 * id)) / 2));
  while (i > 0 && start(i) > id) --i;
  while (i + 1 < n && start(i + 1) <= id) ++i;
  const std::uint64_t j = id - start(i) + i + 1;
  return {static_cast<NodeId>(i), static_cast<NodeId>(j)};
}

}  // namespace covergrow
