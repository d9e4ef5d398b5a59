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

// Exact solvers for small instances and Monte-Carlo approximation-ratio
// estimates built on them.
//
// Every exact solver has a hard size guard and throws GuardExceeded past it;
// there is no heuristic fallback.

#ifndef COVERGROW_ORACLES_H_
#define COVERGROW_ORACLES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "covergrow/clustering.h"
#include "covergrow/graph.h"
#include "covergrow/random.h"

namespace covergrow {

inline constexpr std::size_t kMaxExactCoverNodes = 24;
inline constexpr std::size_t kMaxExactCcNodes = 9;
inline constexpr std::size_t kMaxExactStcNodes = 7;
inline constexpr std::size_t kMaxExactDeletionItems = 20;
inline constexpr std::uint64_t kMaxExactColorEcLabelings = 1'000'000;

template <typename Witness>
struct OptResult {
  double opt_cost = 0.0;
  Witness witness;
};

// Witness: cover nodes, ascending. Branch and bound with a greedy
// matching lower bound.
OptResult<std::vector<NodeId>> ExactVertexCover(const NodeWeightedGraph& g);

// Minimum correlation clustering mistakes over all set partitions.
OptResult<Clustering> ExactCorrelationClustering(const NodeWeightedGraph& g);

// Minimum STC+ labeling, i.e. a minimum vertex cover of the open wedge
// hypergraph.
OptResult<StcLabeling> ExactMinStc(const NodeWeightedGraph& g);

// Witness: deleted item ids, ascending.
OptResult<std::vector<NodeId>> ExactMinD2M(const EdgeWeightedGraph& g);
OptResult<std::vector<NodeId>> ExactDed2(const WeightedDag& d);
// Witness: a color in 1..k per node. Enumerates all k^n labelings.
OptResult<std::vector<std::uint32_t>> ExactColorEc(
    const EdgeColoredHypergraph& h);

using Instance = std::variant<NodeWeightedGraph, EdgeWeightedGraph,
                              WeightedDag, EdgeColoredHypergraph>;

enum class RatioAlgorithm {
  kNeighborCover,  // weighted shuffle + NeighborCover, bound 2
  kGreedyMis,      // uniform shuffle + NeighborCover, bound 2 (unit weights)
  kPitt,           // bound 2
  kPivotCc,        // correlation clustering mistakes, bound 3
  kPivotStc,       // STC+ labeling cost, bound 3
  kMinD2M,
  kDed2,
  kColorEc,
};

// Accepts the CLI names: neighbor, greedy-mis, pitt, pivot-cc, pivot-stc,
// mind2m, ded2, colorec. Throws InvalidInput otherwise.
RatioAlgorithm ParseRatioAlgorithm(std::string_view name);
std::string_view RatioAlgorithmName(RatioAlgorithm algorithm);
double ApproximationBound(RatioAlgorithm algorithm);

// Cost of one randomized run. Throws InvalidInput if the instance kind does
// not fit the algorithm.
double SampleCost(RatioAlgorithm algorithm, const Instance& instance,
                  RandomSource& rng);

// Exact optimum of the problem the algorithm approximates.
double OptimalCost(RatioAlgorithm algorithm, const Instance& instance);

struct SampleStats {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n)
};
// Requires at least 2 samples.
SampleStats Summarize(std::span<const double> samples);

struct RatioEstimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t runs = 0;
  double opt = 0.0;
  double bound = 0.0;

  // mean <= bound * opt + 4 * std_error, with 1e-9 absolute slack for
  // floating-point summation.
  bool Passes() const;
};

inline constexpr std::size_t kMinRatioRuns = 100;

// Runs `runs` independent trials seeded seed, seed + 1, ... and compares
// their mean cost with the exact optimum. Throws InvalidInput for
// runs < kMinRatioRuns and GuardExceeded when the oracle does not apply.
RatioEstimate EstimateRatio(RatioAlgorithm algorithm, const Instance& instance,
                            std::size_t runs, std::uint64_t seed);

}  // namespace covergrow

#endif  // COVERGROW_ORACLES_H_
