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

// Pivot correlation clustering and its strong-triadic-closure (STC+) view.

#ifndef COVERGROW_CLUSTERING_H_
#define COVERGROW_CLUSTERING_H_

#include <cstdint>
#include <vector>

#include "covergrow/graph.h"
#include "covergrow/random.h"

namespace covergrow {

struct Clustering {
  // Cluster index per node, 1..cluster_count. 0 marks an unassigned node
  // and is rejected by every consumer.
  std::vector<std::uint32_t> assignment;
  std::uint32_t cluster_count = 0;
  std::vector<NodeId> pivots;  // discovery order; empty if not from Pivot
};

// Weak edges plus inserted non-edges. Pairs are stored with u < v, ascending.
struct StcLabeling {
  std::vector<Edge> weak_edges;
  std::vector<Edge> new_edges;
  std::uint64_t cost() const { return weak_edges.size() + new_edges.size(); }
};

// Visits nodes in perm order; an unclustered node becomes a pivot and takes
// all unclustered neighbors into a new cluster. Node weights are ignored.
Clustering Pivot(const NodeWeightedGraph& g, const Permutation& perm);

// Pivot over a uniform random order.
Clustering RandomPivot(const NodeWeightedGraph& g, RandomSource& rng);

// Cut edges plus non-adjacent same-cluster pairs. Throws InvalidInput on an
// assignment of the wrong size or an index outside 1..cluster_count.
std::uint64_t CorrelationClusteringCost(const NodeWeightedGraph& g,
                                        const Clustering& c);

// Cut edges become weak; non-adjacent same-cluster pairs become new edges.
StcLabeling StcFromClustering(const NodeWeightedGraph& g, const Clustering& c);

// True iff every open wedge has a weak edge or its missing pair inserted.
// Throws InvalidInput when a weak edge is not an edge of g, a new edge is,
// or a pair is malformed.
bool ValidateStc(const NodeWeightedGraph& g, const StcLabeling& labeling);

}  // namespace covergrow

#endif  // COVERGROW_CLUSTERING_H_
