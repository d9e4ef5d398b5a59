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

#include "covergrow/generators.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "covergrow/error.h"

namespace covergrow {
namespace {

// Calls visit(lo, hi) for each edge of G(n, p), ordered by hi then lo.
template <typename Visit>
void ForEachGnpEdge(std::size_t n, double p, RandomSource rng, Visit visit) {
  if (p <= 0.0 || n < 2) return;
  if (p >= 0.25) {
    // One draw per pair; cheaper than skipping when edges are dense.
    const double scaled = std::ldexp(p, 64);
    const std::uint64_t threshold = scaled >= 0x1p64
                                        ? ~std::uint64_t{0}
                                        : static_cast<std::uint64_t>(scaled);
    for (NodeId hi = 1; hi < n; ++hi) {
      for (NodeId lo = 0; lo < hi; ++lo) {
        if (p >= 1.0 || rng.NextU64() < threshold) visit(lo, hi);
      }
    }
    return;
  }
  // Batagelj-Brandes geometric skipping.
  const double log_q = std::log1p(-p);
  std::int64_t lo = -1;
  std::size_t hi = 1;
  while (hi < n) {
    lo += 1 + static_cast<std::int64_t>(
                  std::floor(std::log1p(-rng.NextDouble()) / log_q));
    while (hi < n && lo >= static_cast<std::int64_t>(hi)) {
      lo -= static_cast<std::int64_t>(hi);
      ++hi;
    }
    if (hi < n) visit(static_cast<NodeId>(lo), static_cast<NodeId>(hi));
  }
}

double RandomWeight(int max_weight, RandomSource& rng) {
  return static_cast<double>(1 + rng.UniformBelow(max_weight));
}

}  // namespace

NodeWeightedGraph RandomGnp(std::size_t n, double p, RandomSource& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("edge probability must lie in [0, 1]");
  const RandomSource fork = rng;
  std::vector<std::size_t> offsets(n + 1, 0);
  ForEachGnpEdge(n, p, fork, [&](NodeId lo, NodeId hi) {
    ++offsets[lo + 1];
    ++offsets[hi + 1];
  });
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());
  std::vector<NodeId> neighbors(offsets.back());
  std::vector<std::size_t> cursor(offsets.begin(), offsets.end() - 1);
  // With edges ordered by (hi, lo), row r gets its lower neighbors while
  // hi == r and its upper neighbors afterwards, each in increasing order.
  ForEachGnpEdge(n, p, fork, [&](NodeId lo, NodeId hi) {
    neighbors[cursor[hi]++] = lo;
    neighbors[cursor[lo]++] = hi;
  });
  // Advance the caller's stream past what the generator consumed.
  rng = RandomSource(rng.NextU64());
  return NodeWeightedGraph::FromCsr(std::move(offsets), std::move(neighbors),
                                    std::vector<double>(n, 1.0));
}

std::vector<double> RandomIntegerWeights(std::size_t count, int lo, int hi,
                                         RandomSource& rng) {
  if (lo > hi) throw InvalidInput("empty weight range");
  std::vector<double> w(count);
  for (double& x : w) {
    x = static_cast<double>(lo + static_cast<int>(rng.UniformBelow(hi - lo + 1)));
  }
  return w;
}

EdgeWeightedGraph RandomEdgeWeightedGraph(std::size_t n, std::size_t m,
                                          int max_weight, RandomSource& rng) {
  if (m > n * (n - (n > 0)) / 2) throw InvalidInput("too many edges requested");
  std::set<Edge> seen;
  std::vector<WeightedEdge> edges;
  while (edges.size() < m) {
    auto u = static_cast<NodeId>(rng.UniformBelow(n));
    auto v = static_cast<NodeId>(rng.UniformBelow(n));
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second) continue;
    edges.push_back({u, v, RandomWeight(max_weight, rng)});
  }
  return EdgeWeightedGraph(n, std::move(edges));
}

WeightedDag RandomDag(std::size_t n, std::size_t m, int max_weight,
                      RandomSource& rng) {
  if (m > n * (n - (n > 0)) / 2) throw InvalidInput("too many arcs requested");
  const Permutation topo = n == 0 ? Permutation() : UniformShuffle(n, rng);
  std::set<Edge> seen;
  std::vector<Arc> arcs;
  while (arcs.size() < m) {
    auto a = rng.UniformBelow(n);
    auto b = rng.UniformBelow(n);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    const Edge arc{topo[a], topo[b]};
    if (!seen.insert(arc).second) continue;
    arcs.push_back({arc.u, arc.v, RandomWeight(max_weight, rng)});
  }
  return WeightedDag(n, std::move(arcs));
}

EdgeColoredHypergraph RandomColoredHypergraph(std::size_t n, std::size_t m,
                                              std::uint32_t k,
                                              std::size_t max_size,
                                              int max_weight,
                                              RandomSource& rng) {
  if (n == 0 && m > 0) throw InvalidInput("hyperedges need nodes");
  max_size = std::min(max_size, n);
  std::vector<ColoredHyperedge> hyperedges;
  for (std::size_t i = 0; i < m; ++i) {
    ColoredHyperedge e;
    const std::size_t size = 1 + rng.UniformBelow(max_size);
    // Partial Fisher-Yates over the node ids.
    std::vector<NodeId> ids(n);
    std::iota(ids.begin(), ids.end(), NodeId{0});
    for (std::size_t j = 0; j < size; ++j) {
      std::swap(ids[j], ids[j + rng.UniformBelow(n - j)]);
    }
    e.members.assign(ids.begin(), ids.begin() + size);
    e.color = 1 + static_cast<std::uint32_t>(rng.UniformBelow(k));
    e.weight = RandomWeight(max_weight, rng);
    hyperedges.push_back(std::move(e));
  }
  return EdgeColoredHypergraph(n, k, std::move(hyperedges));
}

}  // namespace covergrow
