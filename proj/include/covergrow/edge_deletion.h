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

// Implicit NeighborCover for three edge-deletion problems. Each visits the
// items (edges, arcs, hyperedges) in weight-proportional random order and
// keeps an item iff it does not conflict with an item kept earlier. The
// conflict test uses per-node bookkeeping only, so the reduced vertex cover
// graph is never built:
//
//   MinD2M   keep edge (i, j) iff neither endpoint is matched yet.
//   DED-2    keep arc i -> j iff i is no kept head and j is no kept tail.
//   ColorEC  keep hyperedge e iff every member is unlabeled or has e's color.
//
// Given the same RandomSource state, the deleted set equals the cover of
// NeighborCover on the matching reduced graph (see reductions.h).

#ifndef COVERGROW_EDGE_DELETION_H_
#define COVERGROW_EDGE_DELETION_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "covergrow/graph.h"
#include "covergrow/random.h"

namespace covergrow {

struct DeletionResult {
  std::vector<NodeId> deleted;  // item ids, ascending
  std::vector<NodeId> kept;     // item ids, ascending
  double cost = 0.0;            // weight of deleted
  // ColorEC only: color per node, 0 for nodes no kept hyperedge touches.
  std::optional<std::vector<std::uint32_t>> labels;
  std::optional<Permutation> permutation;
};

DeletionResult MinD2M(const EdgeWeightedGraph& g, RandomSource& rng);
DeletionResult MinD2M(const EdgeWeightedGraph& g, const Permutation& order);

DeletionResult Ded2(const WeightedDag& d, RandomSource& rng);
DeletionResult Ded2(const WeightedDag& d, const Permutation& order);

DeletionResult ColorEc(const EdgeColoredHypergraph& h, RandomSource& rng);
DeletionResult ColorEc(const EdgeColoredHypergraph& h, const Permutation& order);

// Gives every still-unlabeled node a uniform color in 1..k. Satisfied
// hyperedges stay satisfied, so this never raises the cost.
void FillUnlabeled(const EdgeColoredHypergraph& h, DeletionResult& result,
                   RandomSource& rng);

// Weight of hyperedges not satisfied by `labels` (a hyperedge is satisfied
// iff all its members carry its color).
double UnsatisfiedWeight(const EdgeColoredHypergraph& h,
                         const std::vector<std::uint32_t>& labels);

// Feasibility of a kept set, by brute-force pairwise comparison.
bool IsMatching(const EdgeWeightedGraph& g, const std::vector<NodeId>& kept);
bool IsTwoPathFree(const WeightedDag& d, const std::vector<NodeId>& kept);
bool IsColorConsistent(const EdgeColoredHypergraph& h,
                       const std::vector<NodeId>& kept);

}  // namespace covergrow

#endif  // COVERGROW_EDGE_DELETION_H_
