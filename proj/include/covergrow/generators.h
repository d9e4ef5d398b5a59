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

// Seeded random instance generators for tests and benchmarks.

#ifndef COVERGROW_GENERATORS_H_
#define COVERGROW_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "covergrow/graph.h"
#include "covergrow/random.h"

namespace covergrow {

// Erdos-Renyi G(n, p) with unit weights, written straight into CSR form
// (two passes over a forked stream), so dense graphs cost no edge list.
NodeWeightedGraph RandomGnp(std::size_t n, double p, RandomSource& rng);

// Integers drawn uniformly from lo..hi, as doubles.
std::vector<double> RandomIntegerWeights(std::size_t count, int lo, int hi,
                                         RandomSource& rng);

// Exactly m distinct random node pairs, integer weights 1..max_weight.
EdgeWeightedGraph RandomEdgeWeightedGraph(std::size_t n, std::size_t m,
                                          int max_weight, RandomSource& rng);

// Exactly m distinct arcs, all pointing forward in a random topological
// order, integer weights 1..max_weight.
WeightedDag RandomDag(std::size_t n, std::size_t m, int max_weight,
                      RandomSource& rng);

// m hyperedges with 1..max_size distinct members, colors 1..k, integer
// weights 1..max_weight.
EdgeColoredHypergraph RandomColoredHypergraph(std::size_t n, std::size_t m,
                                              std::uint32_t k,
                                              std::size_t max_size,
                                              int max_weight,
                                              RandomSource& rng);

}  // namespace covergrow

#endif  // COVERGROW_GENERATORS_H_
