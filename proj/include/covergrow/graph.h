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

// Instance types. Every type validates its invariants on construction and is
// immutable afterwards, so instances can be shared read-only across threads.

#ifndef COVERGROW_GRAPH_H_
#define COVERGROW_GRAPH_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace covergrow {

using NodeId = std::uint32_t;

// Undirected node pair. Instances produced by this library always have u < v.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Undirected simple graph with nonnegative node weights, stored as a compact
// sorted adjacency array (CSR).
class NodeWeightedGraph {
 public:
  NodeWeightedGraph() = default;

  // Builds a graph from an edge list in either orientation. Duplicate and
  // symmetric-duplicate edges are merged. Weights default to 1.
  // Throws InvalidInput on self-loops, out-of-range ids, a weight vector of
  // the wrong length, or negative/non-finite weights.
  static NodeWeightedGraph Build(
      std::size_t node_count, std::span<const Edge> edges,
      std::optional<std::vector<double>> weights = std::nullopt);

  // Adopts a prebuilt CSR layout: offsets has node_count + 1 entries and
  // every row of neighbors must be strictly increasing, loop-free and
  // mirrored. Verified in O(n + m).
  static NodeWeightedGraph FromCsr(std::vector<std::size_t> offsets,
                                   std::vector<NodeId> neighbors,
                                   std::vector<double> weights);

  std::size_t node_count() const { return weights_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }

  std::span<const NodeId> Neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t Degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }

  double weight(NodeId v) const { return weights_[v]; }
  std::span<const double> weights() const { return weights_; }
  bool HasUnitWeights() const;

  bool HasEdge(NodeId u, NodeId v) const;

  // All edges with u < v in ascending (u, v) order.
  std::vector<Edge> Edges() const;

  // Sum of node weights over `nodes`.
  double TotalWeight(std::span<const NodeId> nodes) const;

  // Same adjacency, new node weights (validated like Build).
  NodeWeightedGraph WithWeights(std::vector<double> weights) const;

  friend bool operator==(const NodeWeightedGraph&,
                         const NodeWeightedGraph&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<double> weights_;
};

struct WeightedEdge {
  NodeId u = 0;
  NodeId v = 0;
  double weight = 1.0;

  friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Edge-weighted undirected simple graph. The item id of an edge is its index
// in edges(); endpoints are stored with u < v.
class EdgeWeightedGraph {
 public:
  EdgeWeightedGraph() = default;
  // Throws InvalidInput on self-loops, duplicates, bad ids or bad weights.
  EdgeWeightedGraph(std::size_t node_count, std::vector<WeightedEdge> edges);

  std::size_t node_count() const { return node_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  std::vector<double> Weights() const;

  friend bool operator==(const EdgeWeightedGraph&,
                         const EdgeWeightedGraph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<WeightedEdge> edges_;
};

struct Arc {
  NodeId tail = 0;
  NodeId head = 0;
  double weight = 1.0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

// Arc-weighted directed graph, acyclic unless constructed with
// check_acyclic = false. The item id of an arc is its index in arcs().
class WeightedDag {
 public:
  WeightedDag() = default;
  // Throws InvalidInput on self-arcs, repeated arcs, bad ids, bad weights,
  // or (when check_acyclic) a directed cycle.
  WeightedDag(std::size_t node_count, std::vector<Arc> arcs,
              bool check_acyclic = true);

  std::size_t node_count() const { return node_count_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<double> Weights() const;

  static bool IsAcyclic(std::size_t node_count, std::span<const Arc> arcs);

  friend bool operator==(const WeightedDag&, const WeightedDag&) = default;

 private:
  std::size_t node_count_ = 0;
  std::vector<Arc> arcs_;
};

struct ColoredHyperedge {
  std::vector<NodeId> members;
  std::uint32_t color = 1;  // 1..color_count
  double weight = 1.0;

  friend bool operator==(const ColoredHyperedge&,
                         const ColoredHyperedge&) = default;
};

// Hypergraph whose hyperedges carry one of color_count colors.
class EdgeColoredHypergraph {
 public:
  EdgeColoredHypergraph() = default;
  // Throws InvalidInput on empty hyperedges, repeated or out-of-range
  // members, colors outside 1..color_count, or bad weights.
  EdgeColoredHypergraph(std::size_t node_count, std::uint32_t color_count,
                        std::vector<ColoredHyperedge> hyperedges);

  std::size_t node_count() const { return node_count_; }
  std::uint32_t color_count() const { return color_count_; }
  std::size_t hyperedge_count() const { return hyperedges_.size(); }
  const std::vector<ColoredHyperedge>& hyperedges() const {
    return hyperedges_;
  }
  std::vector<double> Weights() const;

  friend bool operator==(const EdgeColoredHypergraph&,
                         const EdgeColoredHypergraph&) = default;

 private:
  std::size_t node_count_ = 0;
  std::uint32_t color_count_ = 1;
  std::vector<ColoredHyperedge> hyperedges_;
};

// Bijection between unordered pairs {i, j} of an n-node graph and the ids
// 0 .. n(n-1)/2 - 1, in lexicographic pair order.
class PairIndex {
 public:
  explicit PairIndex(std::size_t node_count) : node_count_(node_count) {}

  std::size_t node_count() const { return node_count_; }
  std::uint64_t pair_count() const {
    const std::uint64_t n = node_count_;
    return n < 2 ? 0 : n * (n - 1) / 2;
  }
  // Order of i and j does not matter; i != j.
  std::uint64_t Id(NodeId i, NodeId j) const;
  Edge Pair(std::uint64_t id) const;

 private:
  std::size_t node_count_;
};

// 3-uniform hypergraph on pair-nodes. Only pair-nodes that appear in some
// hyperedge are listed in active_nodes; pair_index covers all pairs.
struct Hypergraph3 {
  PairIndex pair_index{0};
  std::vector<std::array<std::uint64_t, 3>> hyperedges;
  std::vector<std::uint64_t> active_nodes;  // sorted

  std::uint64_t node_count() const { return pair_index.pair_count(); }
};

}  // namespace covergrow

#endif  // COVERGROW_GRAPH_H_
