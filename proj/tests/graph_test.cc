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

#include <set>

#include "covergrow/error.h"
#include "covergrow/generators.h"
#include "covergrow/graph.h"
#include "covergrow/reductions.h"
#include "doctest.h"
#include "test_util.h"

namespace covergrow {
namespace {

using testing::Complete;
using testing::Cycle;
using testing::Path;
using testing::Star;

// Full scan: rows strictly increasing, loop-free, mirrored.
bool AdjacencyIsSound(const NodeWeightedGraph& g) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const auto row = g.Neighbors(v);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] == v || row[i] >= g.node_count()) return false;
      if (i > 0 && row[i - 1] >= row[i]) return false;
      const auto back = g.Neighbors(row[i]);
      if (std::find(back.begin(), back.end(), v) == back.end()) return false;
    }
  }
  return true;
}

TEST_CASE("build triangle with unit weights") {
  const std::vector<Edge> edges = {{0, 1}, {1, 2}, {0, 2}};
  const auto g = NodeWeightedGraph::Build(3, edges);
  CHECK(g.node_count() == 3);
  CHECK(g.edge_count() == 3);
  CHECK(g.HasUnitWeights());
  for (NodeId v = 0; v < 3; ++v) CHECK(g.weight(v) == 1.0);
  CHECK(AdjacencyIsSound(g));
}

TEST_CASE("build merges symmetric duplicates") {
  const std::vector<Edge> edges = {{0, 1}, {1, 0}};
  const auto g = NodeWeightedGraph::Build(2, edges);
  CHECK(g.edge_count() == 1);
  CHECK(g.Degree(0) == 1);
}

TEST_CASE("build rejects bad input") {
  const std::vector<Edge> loop = {{0, 0}};
  CHECK_THROWS_AS(NodeWeightedGraph::Build(2, loop), InvalidInput);
  const std::vector<Edge> out_of_range = {{0, 2}};
  CHECK_THROWS_AS(NodeWeightedGraph::Build(2, out_of_range), InvalidInput);
  const std::vector<Edge> edge = {{0, 1}};
  CHECK_THROWS_AS(NodeWeightedGraph::Build(2, edge, std::vector<double>{1.0, -1.0}),
                  InvalidInput);
  CHECK_THROWS_AS(NodeWeightedGraph::Build(2, edge, std::vector<double>{1.0}),
                  InvalidInput);
  // Zero weights are allowed.
  CHECK_NOTHROW(NodeWeightedGraph::Build(2, edge, std::vector<double>{0.0, 0.0}));
}

TEST_CASE("from csr rejects asymmetric rows") {
  CHECK_THROWS_AS(NodeWeightedGraph::FromCsr({0, 1, 1}, {1}, {1.0, 1.0}), InvalidInput);
  CHECK_NOTHROW(NodeWeightedGraph::FromCsr({0, 1, 2}, {1, 0}, {1.0, 1.0}));
}

TEST_CASE("random graphs have sound adjacency") {
  RandomSource rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng.UniformBelow(40);
    const auto g = RandomGnp(n, rng.NextDouble(), rng);
    CHECK(AdjacencyIsSound(g));
    CHECK(g == NodeWeightedGraph::Build(n, g.Edges()));
  }
}

TEST_CASE("line graph examples") {
  auto unit = [](const NodeWeightedGraph& g) {
    std::vector<WeightedEdge> edges;
    for (const Edge& e : g.Edges()) edges.push_back({e.u, e.v, 1.0});
    return EdgeWeightedGraph(g.node_count(), edges);
  };
  const auto tri = LineGraph(unit(Complete(3)));
  CHECK(tri.node_count() == 3);
  CHECK(tri.edge_count() == 3);
  const auto path = LineGraph(unit(Path(3)));
  CHECK(path.node_count() == 2);
  CHECK(path.edge_count() == 1);
  const auto star = LineGraph(unit(Star(3)));
  CHECK(star.node_count() == 3);
  CHECK(star.edge_count() == 3);
}

TEST_CASE("line graph matches brute-force pair count") {
  RandomSource rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.UniformBelow(12);
    const std::size_t m = std::min<std::size_t>(rng.UniformBelow(51), n * (n - 1) / 2);
    const auto g = RandomEdgeWeightedGraph(n, m, 5, rng);
    const auto lg = LineGraph(g);
    REQUIRE(lg.node_count() == g.edge_count());
    std::size_t sharing = 0;
    const auto& e = g.edges();
    for (std::size_t i = 0; i < e.size(); ++i) {
      CHECK(lg.weight(static_cast<NodeId>(i)) == e[i].weight);
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const bool share = e[i].u == e[j].u || e[i].u == e[j].v || e[i].v == e[j].u ||
                           e[i].v == e[j].v;
        sharing += share;
        CHECK(lg.HasEdge(static_cast<NodeId>(i), static_cast<NodeId>(j)) == share);
      }
    }
    CHECK(lg.edge_count() == sharing);
  }
}

TEST_CASE("ded2 conflict graph examples") {
  const auto path = Ded2ConflictGraph(WeightedDag(3, {{0, 1, 1.0}, {1, 2, 1.0}}));
  CHECK(path.node_count() == 2);
  CHECK(path.edge_count() == 1);
  const auto disjoint = Ded2ConflictGraph(WeightedDag(4, {{0, 1, 1.0}, {2, 3, 1.0}}));
  CHECK(disjoint.edge_count() == 0);
  const auto fork = Ded2ConflictGraph(WeightedDag(3, {{0, 1, 1.0}, {0, 2, 1.0}}));
  CHECK(fork.node_count() == 2);
  CHECK(fork.edge_count() == 0);
}

TEST_CASE("ded2 conflict graph counts directed two-paths") {
  RandomSource rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.UniformBelow(12);
    const std::size_t m = std::min<std::size_t>(rng.UniformBelow(51), n * (n - 1) / 2);
    const auto d = RandomDag(n, m, 5, rng);
    const auto cg = Ded2ConflictGraph(d);
    std::set<Edge> two_paths;
    const auto& a = d.arcs();
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[i].head == a[j].tail) {
          two_paths.insert({static_cast<NodeId>(std::min(i, j)),
                            static_cast<NodeId>(std::max(i, j))});
        }
      }
    }
    CHECK(cg.edge_count() == two_paths.size());
    for (const Edge& e : two_paths) CHECK(cg.HasEdge(e.u, e.v));
  }
}

TEST_CASE("colorec conflict graph examples") {
  const auto conflict = ColorEcConflictGraph(
      EdgeColoredHypergraph(4, 2, {{{1, 2}, 1, 1.0}, {{2, 3}, 2, 1.0}}));
  CHECK(conflict.node_count() == 2);
  CHECK(conflict.edge_count() == 1);
  const auto same = ColorEcConflictGraph(
      EdgeColoredHypergraph(4, 2, {{{1, 2}, 1, 1.0}, {{2, 3}, 1, 1.0}}));
  CHECK(same.edge_count() == 0);
  const auto apart = ColorEcConflictGraph(
      EdgeColoredHypergraph(5, 2, {{{1, 2}, 1, 1.0}, {{3, 4}, 2, 1.0}}));
  CHECK(apart.edge_count() == 0);
}

TEST_CASE("open wedge examples") {
  const auto path = EnumerateOpenWedges(Path(3));
  REQUIRE(path.size() == 1);
  CHECK(path[0] == OpenWedge{1, 0, 2});
  CHECK(EnumerateOpenWedges(Cycle(4)).size() == 4);
  CHECK(EnumerateOpenWedges(Complete(4)).empty());

  const auto h = OpenWedgeHypergraph(Path(3));
  CHECK(h.node_count() == 3);
  REQUIRE(h.hyperedges.size() == 1);
  CHECK(h.active_nodes.size() == 3);
  CHECK(OpenWedgeHypergraph(Complete(3)).hyperedges.empty());
  CHECK(OpenWedgeHypergraph(Star(3)).hyperedges.size() == 3);
}

TEST_CASE("open wedges agree with triple enumeration") {
  RandomSource rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = rng.UniformBelow(11);
    const auto g = testing::RandomGraph(n, rng.NextDouble(), rng);
    const auto wedges = EnumerateOpenWedges(g);
    const auto expected = testing::BruteForceWedges(g);
    REQUIRE(wedges.size() == expected.size());
    std::set<OpenWedge> found(wedges.begin(), wedges.end());
    for (const auto& t : expected) CHECK(found.contains(OpenWedge{t.center, t.a, t.b}));
    const auto h = OpenWedgeHypergraph(g);
    CHECK(h.hyperedges.size() == expected.size());
    for (const auto& e : h.hyperedges) {
      CHECK(e[0] != e[1]);
      CHECK(e[1] != e[2]);
      CHECK(e[0] != e[2]);
    }
  }
}

TEST_CASE("pair index is a bijection") {
  for (std::size_t n : {0, 1, 2, 3, 7, 50}) {
    const PairIndex index(n);
    CHECK(index.pair_count() == testing::PairCount(n));
    std::uint64_t expected = 0;
    for (NodeId i = 0; i < n; ++i) {
      for (NodeId j = i + 1; j < n; ++j) {
        CHECK(index.Id(i, j) == expected);
        CHECK(index.Id(j, i) == expected);
        const auto [a, b] = index.Pair(expected);
        CHECK(a == i);
        CHECK(b == j);
        ++expected;
      }
    }
  }
}

TEST_CASE("dag rejects cycles unless asked not to") {
  const std::vector<Arc> cycle = {{0, 1, 1.0}, {1, 2, 1.0}, {2, 0, 1.0}};
  CHECK_THROWS_AS(WeightedDag(3, cycle), InvalidInput);
  CHECK_NOTHROW(WeightedDag(3, cycle, false));
  CHECK_THROWS_AS(WeightedDag(2, {{0, 1, 1.0}, {0, 1, 2.0}}), InvalidInput);
}

TEST_CASE("hypergraph validation") {
  CHECK_THROWS_AS(EdgeColoredHypergraph(3, 2, {{{}, 1, 1.0}}), InvalidInput);
  CHECK_THROWS_AS(EdgeColoredHypergraph(3, 2, {{{0, 0}, 1, 1.0}}), InvalidInput);
  CHECK_THROWS_AS(EdgeColoredHypergraph(3, 2, {{{0, 1}, 3, 1.0}}), InvalidInput);
  CHECK_THROWS_AS(EdgeColoredHypergraph(3, 2, {{{0, 1}, 0, 1.0}}), InvalidInput);
  CHECK_NOTHROW(EdgeColoredHypergraph(3, 2, {{{0, 1}, 2, 0.0}}));
}

}  // namespace
}  // namespace covergrow
