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

// Whitespace-separated text formats. Everything after '#' on a line is a
// comment; blank lines are skipped; node ids are 0-based.
//
//   graph <n> <m>        then m lines "u v"; "w <node> <weight>" lines may
//                        appear anywhere after the header (default weight 1)
//   ewgraph <n> <m>      then m lines "u v <weight>"
//   dag <n> <m>          then m lines "tail head <weight>"
//   chg <n> <m> <k>      then m lines "<color 1..k> <weight> <size> <v1> ..."
//
// Parse failures throw ParseError carrying the 1-based line and column.

#ifndef COVERGROW_IO_H_
#define COVERGROW_IO_H_

#include <string>
#include <string_view>
#include <vector>

#include "covergrow/graph.h"
#include "covergrow/oracles.h"
#include "covergrow/random.h"

namespace covergrow {

enum class InstanceKind { kGraph, kEdgeWeightedGraph, kDag, kHypergraph };

std::string_view InstanceKindName(InstanceKind kind);  // header keyword

// A node-weighted graph plus its edges in file order (duplicates dropped),
// which the edge-scanning algorithms use as their default visiting order.
struct GraphFile {
  NodeWeightedGraph graph;
  std::vector<Edge> edge_order;
};

// Kind named by the first non-comment token.
InstanceKind DetectKind(std::string_view text);

GraphFile ParseGraph(std::string_view text);
EdgeWeightedGraph ParseEdgeWeightedGraph(std::string_view text);
WeightedDag ParseDag(std::string_view text, bool check_acyclic = true);
EdgeColoredHypergraph ParseHypergraph(std::string_view text);

// Dispatches on the header; throws ParseError if it is not `expected`.
Instance ParseInstance(std::string_view text, InstanceKind expected,
                       bool check_acyclic = true);

// Whitespace-separated item ids forming a permutation.
Permutation ParsePermutation(std::string_view text);

std::string FormatGraph(const NodeWeightedGraph& g);
std::string FormatEdgeWeightedGraph(const EdgeWeightedGraph& g);
std::string FormatDag(const WeightedDag& d);
std::string FormatHypergraph(const EdgeColoredHypergraph& h);

// Whole file as a string; throws IoError.
std::string ReadFile(const std::string& path);

}  // namespace covergrow

#endif  // COVERGROW_IO_H_
