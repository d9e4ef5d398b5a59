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

// Vertex cover and maximal independent set algorithms.
//
// NeighborCover visits nodes in a given order and puts a node into the
// independent set unless an earlier independent node is adjacent to it, in
// which case it goes to the cover. With a weight-proportional random order
// it is a randomized 2-approximation for weighted vertex cover in
// expectation; with a uniform order it is the classic greedy MIS.
//
// The edge-scanning baselines (MatchingVc, PittVc, LocalRatioVc) take the
// edge visiting order explicitly so their output is reproducible.

#ifndef COVERGROW_COVER_H_
#define COVERGROW_COVER_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "covergrow/graph.h"
#include "covergrow/random.h"

namespace covergrow {

struct CoverResult {
  std::vector<NodeId> cover;        // ascending
  std::vector<NodeId> independent;  // ascending; V \ cover for every algorithm
  double cost = 0.0;                // node weight of cover
  std::optional<Permutation> permutation;
  std::string algorithm;
  // Set when the algorithm treats every node as unit weight but the graph
  // carries other weights. cost still uses the real weights.
  bool weights_ignored = false;
};

struct EdgeValue {
  Edge edge;
  double value = 0.0;
};

// Nonnegative edge values whose per-node incident sums stay within the node
// weight; their total lower-bounds the minimum cover weight.
struct DualCertificate {
  std::vector<EdgeValue> values;  // in edge visiting order
  double total = 0.0;
};

struct LocalRatioResult {
  CoverResult result;
  DualCertificate certificate;
};

struct ParallelMisResult {
  CoverResult result;
  std::size_t rounds = 0;
};

// Lazy check-on-visit form, O(n + m). Throws InvalidInput if perm does not
// cover exactly g's nodes.
CoverResult NeighborCover(const NodeWeightedGraph& g, const Permutation& perm);

// NeighborCover over WeightedShuffle(g.weights(), rng).
CoverResult NeighborCoverRandomized(const NodeWeightedGraph& g,
                                    RandomSource& rng);

// NeighborCover over UniformShuffle(n, rng); weights do not influence the
// order.
CoverResult GreedyMis(const NodeWeightedGraph& g, RandomSource& rng);

// Maximal-matching cover: both endpoints of every uncovered edge.
// edge_order must list each edge of g exactly once (either orientation).
CoverResult MatchingVc(const NodeWeightedGraph& g,
                       std::span<const Edge> edge_order);
CoverResult MatchingVc(const NodeWeightedGraph& g);

// For each uncovered edge (u, v), u joins the cover with probability
// w_v / (w_u + w_v), otherwise v. Two zero-weight endpoints: fair coin.
CoverResult PittVc(const NodeWeightedGraph& g, std::span<const Edge> edge_order,
                   RandomSource& rng);
CoverResult PittVc(const NodeWeightedGraph& g, RandomSource& rng);

// Bar-Yehuda & Even local ratio. The per-edge reductions form the returned
// certificate.
LocalRatioResult LocalRatioVc(const NodeWeightedGraph& g,
                              std::span<const Edge> edge_order);
LocalRatioResult LocalRatioVc(const NodeWeightedGraph& g);

// Round-synchronous greedy MIS: each round every remaining node that precedes
// all of its remaining neighbors in perm joins the independent set, then those
// nodes and their neighbors leave the graph. Same node sets as
// NeighborCover(g, perm). An edgeless nonempty graph takes one round.
ParallelMisResult ParallelGreedyMis(const NodeWeightedGraph& g,
                                    const Permutation& perm);

// Throw InvalidInput on an out-of-range node id.
bool VerifyCover(const NodeWeightedGraph& g, std::span<const NodeId> nodes);
bool VerifyIndependent(const NodeWeightedGraph& g,
                       std::span<const NodeId> nodes);
// Independent and no outside node can be added.
bool VerifyMis(const NodeWeightedGraph& g, std::span<const NodeId> nodes);

// Every value >= 0, every per-node incident sum <= the node weight, each
// value on an edge of g, and total equal to the sum of values.
bool VerifyCertificate(const NodeWeightedGraph& g,
                       const DualCertificate& certificate);

}  // namespace covergrow

#endif  // COVERGROW_COVER_H_
