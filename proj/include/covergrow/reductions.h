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

// Builders that turn edge-deletion and clustering problems into vertex cover
// instances. In every reduced graph, node i stands for item i of the input
// (edge, arc or hyperedge), weighted by that item's weight.

#ifndef COVERGROW_REDUCTIONS_H_
#define COVERGROW_REDUCTIONS_H_

#include <vector>

#include "covergrow/graph.h"

namespace covergrow {

// Two edges are adjacent iff they share an endpoint.
NodeWeightedGraph LineGraph(const EdgeWeightedGraph& g);

// Two arcs are adjacent iff together they form a directed 2-path.
NodeWeightedGraph Ded2ConflictGraph(const WeightedDag& d);

// Two hyperedges are adjacent iff they overlap and have different colors.
NodeWeightedGraph ColorEcConflictGraph(const EdgeColoredHypergraph& h);

// Node triple inducing exactly two edges, both incident to `center`.
// Leaves satisfy a < b.
struct OpenWedge {
  NodeId center = 0;
  NodeId a = 0;
  NodeId b = 0;

  friend auto operator<=>(const OpenWedge&, const OpenWedge&) = default;
};

// Every open wedge once, grouped by center in increasing order.
std::vector<OpenWedge> EnumerateOpenWedges(const NodeWeightedGraph& g);

// One pair-node per unordered node pair, one hyperedge {v_ca, v_cb, v_ab}
// per open wedge. Weights of g are ignored.
Hypergraph3 OpenWedgeHypergraph(const NodeWeightedGraph& g);

}  // namespace covergrow

#endif  // COVERGROW_REDUCTIONS_H_
