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

#include "covergrow/io.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <span>
#include <sstream>
#include <utility>

#include <fmt/format.h>

#include "covergrow/error.h"

namespace covergrow {
namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::vector<Token> tokens;
};

// Non-empty lines after comment stripping.
std::vector<Line> Tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t eol = text.find('\n');
    std::string_view raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view() : text.substr(eol + 1);
    if (const std::size_t hash = raw.find('#'); hash != std::string_view::npos) {
      raw = raw.substr(0, hash);
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      const std::size_t start = i;
      while (i < raw.size() && !std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
      if (i > start) line.tokens.push_back({raw.substr(start, i - start), start + 1});
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (text.empty()) break;
  }
  return lines;
}

[[noreturn]] void Fail(const Line& line, const Token& tok, const std::string& what) {
  throw ParseError(line.number, tok.column, what);
}

[[noreturn]] void Fail(const Line& line, const std::string& what) {
  throw ParseError(line.number, 0, what);
}

std::uint64_t ParseCount(const Line& line, const Token& tok) {
  std::uint64_t value = 0;
  const auto* end = tok.text.data() + tok.text.size();
  const auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    Fail(line, tok, "expected a nonnegative integer, got '" + std::string(tok.text) + "'");
  }
  return value;
}

NodeId ParseId(const Line& line, const Token& tok, std::uint64_t node_count) {
  const std::uint64_t v = ParseCount(line, tok);
  if (v >= node_count) {
    Fail(line, tok, "node id " + std::to_string(v) + " out of range [0, " +
                        std::to_string(node_count) + ")");
  }
  return static_cast<NodeId>(v);
}

double ParseWeight(const Line& line, const Token& tok) {
  double value = 0.0;
  const auto* end = tok.text.data() + tok.text.size();
  const auto [ptr, ec] = std::from_chars(tok.text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    Fail(line, tok, "expected a number, got '" + std::string(tok.text) + "'");
  }
  if (!std::isfinite(value) || value < 0.0) {
    Fail(line, tok, "weight must be finite and >= 0");
  }
  return value;
}

void ExpectTokens(const Line& line, std::size_t count, const char* shape) {
  if (line.tokens.size() != count) {
    Fail(line, std::string("expected '") + shape + "', got " +
                   std::to_string(line.tokens.size()) + " fields");
  }
}

struct Header {
  const Line* line = nullptr;
  std::vector<std::uint64_t> values;
  std::span<const Line> body;
};

Header ReadHeader(const std::vector<Line>& lines, std::string_view keyword,
                  std::size_t value_count, const char* shape) {
  if (lines.empty()) throw ParseError(1, 0, "empty input, expected '" + std::string(shape) + "'");
  const Line& first = lines.front();
  if (first.tokens.front().text != keyword) {
    Fail(first, first.tokens.front(), "expected header '" + std::string(keyword) +
                                          "', got '" + std::string(first.tokens.front().text) + "'");
  }
  ExpectTokens(first, value_count + 1, shape);
  Header h;
  h.line = &first;
  for (std::size_t i = 1; i <= value_count; ++i) {
    h.values.push_back(ParseCount(first, first.tokens[i]));
  }
  if (h.values[0] > 0xffffffffULL) Fail(first, first.tokens[1], "node count too large");
  h.body = std::span<const Line>(lines).subspan(1);
  return h;
}

void CheckItemCount(const Header& h, std::size_t seen, const char* items) {
  if (seen != h.values[1]) {
    Fail(*h.line, "header declares " + std::to_string(h.values[1]) + " " + items +
                      ", found " + std::to_string(seen));
  }
}

std::string FormatWeight(double w) { return fmt::format("{}", w); }

}  // namespace

std::string_view InstanceKindName(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::kGraph: return "graph";
    case InstanceKind::kEdgeWeightedGraph: return "ewgraph";
    case InstanceKind::kDag: return "dag";
    case InstanceKind::kHypergraph: return "chg";
  }
  return "unknown";
}

InstanceKind DetectKind(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  if (lines.empty()) throw ParseError(1, 0, "empty input, expected a header");
  const Token& head = lines.front().tokens.front();
  for (InstanceKind k : {InstanceKind::kGraph, InstanceKind::kEdgeWeightedGraph,
                         InstanceKind::kDag, InstanceKind::kHypergraph}) {
    if (head.text == InstanceKindName(k)) return k;
  }
  Fail(lines.front(), head, "unrecognized header '" + std::string(head.text) +
                                "' (expected graph, ewgraph, dag or chg)");
}

GraphFile ParseGraph(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  const Header h = ReadHeader(lines, "graph", 2, "graph <n> <m>");
  const std::uint64_t n = h.values[0];
  std::vector<double> weights(n, 1.0);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  std::vector<Edge> order;
  for (const Line& line : h.body) {
    if (line.tokens.front().text == "w") {
      ExpectTokens(line, 3, "w <node> <weight>");
      weights[ParseId(line, line.tokens[1], n)] = ParseWeight(line, line.tokens[2]);
      continue;
    }
    ExpectTokens(line, 2, "u v");
    const NodeId u = ParseId(line, line.tokens[0], n);
    const NodeId v = ParseId(line, line.tokens[1], n);
    if (u == v) Fail(line, line.tokens[1], "self-loop at node " + std::to_string(u));
    edges.push_back({u, v});
    if (seen.insert(u < v ? Edge{u, v} : Edge{v, u}).second) order.push_back({u, v});
  }
  CheckItemCount(h, edges.size(), "edges");
  return {NodeWeightedGraph::Build(n, edges, std::move(weights)), std::move(order)};
}

EdgeWeightedGraph ParseEdgeWeightedGraph(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  const Header h = ReadHeader(lines, "ewgraph", 2, "ewgraph <n> <m>");
  const std::uint64_t n = h.values[0];
  std::vector<WeightedEdge> edges;
  std::set<Edge> seen;
  for (const Line& line : h.body) {
    ExpectTokens(line, 3, "u v <weight>");
    const NodeId u = ParseId(line, line.tokens[0], n);
    const NodeId v = ParseId(line, line.tokens[1], n);
    if (u == v) Fail(line, line.tokens[1], "self-loop at node " + std::to_string(u));
    if (!seen.insert(u < v ? Edge{u, v} : Edge{v, u}).second) {
      Fail(line, "duplicate edge (" + std::to_string(u) + ", " + std::to_string(v) + ")");
    }
    edges.push_back({u, v, ParseWeight(line, line.tokens[2])});
  }
  CheckItemCount(h, edges.size(), "edges");
  return EdgeWeightedGraph(n, std::move(edges));
}

WeightedDag ParseDag(std::string_view text, bool check_acyclic) {
  const std::vector<Line> lines = Tokenize(text);
  const Header h = ReadHeader(lines, "dag", 2, "dag <n> <m>");
  const std::uint64_t n = h.values[0];
  std::vector<Arc> arcs;
  std::set<Edge> seen;
  for (const Line& line : h.body) {
    ExpectTokens(line, 3, "tail head <weight>");
    const NodeId tail = ParseId(line, line.tokens[0], n);
    const NodeId head = ParseId(line, line.tokens[1], n);
    if (tail == head) Fail(line, line.tokens[1], "self-arc at node " + std::to_string(tail));
    if (!seen.insert({tail, head}).second) {
      Fail(line, "duplicate arc " + std::to_string(tail) + " -> " + std::to_string(head));
    }
    arcs.push_back({tail, head, ParseWeight(line, line.tokens[2])});
  }
  CheckItemCount(h, arcs.size(), "arcs");
  if (check_acyclic && !WeightedDag::IsAcyclic(n, arcs)) {
    Fail(*h.line, "arc set contains a directed cycle (use --no-acyclic-check to process it anyway)");
  }
  return WeightedDag(n, std::move(arcs), false);
}

EdgeColoredHypergraph ParseHypergraph(std::string_view text) {
  const std::vector<Line> lines = Tokenize(text);
  const Header h = ReadHeader(lines, "chg", 3, "chg <n> <m> <k>");
  const std::uint64_t n = h.values[0];
  const std::uint64_t k = h.values[2];
  if (k == 0 || k > 0xffffffffULL) Fail(*h.line, h.line->tokens[3], "color count must be in 1..2^32-1");
  std::vector<ColoredHyperedge> hyperedges;
  for (const Line& line : h.body) {
    if (line.tokens.size() < 3) Fail(line, "expected '<color> <weight> <size> <v1> ...'");
    ColoredHyperedge e;
    const std::uint64_t color = ParseCount(line, line.tokens[0]);
    if (color < 1 || color > k) {
      Fail(line, line.tokens[0], "color " + std::to_string(color) + " outside 1.." + std::to_string(k));
    }
    e.color = static_cast<std::uint32_t>(color);
    e.weight = ParseWeight(line, line.tokens[1]);
    const std::uint64_t size = ParseCount(line, line.tokens[2]);
    if (size == 0) Fail(line, line.tokens[2], "hyperedge must be nonempty");
    if (line.tokens.size() != 3 + size) {
      Fail(line, "hyperedge declares " + std::to_string(size) + " members, lists " +
                     std::to_string(line.tokens.size() - 3));
    }
    std::set<NodeId> members;
    for (std::size_t i = 3; i < line.tokens.size(); ++i) {
      const NodeId v = ParseId(line, line.tokens[i], n);
      if (!members.insert(v).second) {
        Fail(line, line.tokens[i], "member " + std::to_string(v) + " repeated");
      }
      e.members.push_back(v);
    }
    hyperedges.push_back(std::move(e));
  }
  CheckItemCount(h, hyperedges.size(), "hyperedges");
  return EdgeColoredHypergraph(n, static_cast<std::uint32_t>(k), std::move(hyperedges));
}

Instance ParseInstance(std::string_view text, InstanceKind expected,
                       bool check_acyclic) {
  const InstanceKind kind = DetectKind(text);
  if (kind != expected) {
    throw ParseError(1, 1, "expected a '" + std::string(InstanceKindName(expected)) +
                               "' file, got '" + std::string(InstanceKindName(kind)) + "'");
  }
  switch (kind) {
    case InstanceKind::kGraph: return ParseGraph(text).graph;
    case InstanceKind::kEdgeWeightedGraph: return ParseEdgeWeightedGraph(text);
    case InstanceKind::kDag: return ParseDag(text, check_acyclic);
    case InstanceKind::kHypergraph: return ParseHypergraph(text);
  }
  throw ParseError(1, 1, "unknown instance kind");
}

Permutation ParsePermutation(std::string_view text) {
  std::vector<NodeId> order;
  for (const Line& line : Tokenize(text)) {
    for (const Token& tok : line.tokens) {
      order.push_back(ParseId(line, tok, 0x100000000ULL));
    }
  }
  try {
    return Permutation(std::move(order));
  } catch (const InvalidInput& e) {
    throw ParseError(1, 0, e.what());
  }
}

std::string FormatGraph(const NodeWeightedGraph& g) {
  std::string out = fmt::format("graph {} {}\n", g.node_count(), g.edge_count());
  for (const Edge& e : g.Edges()) out += fmt::format("{} {}\n", e.u, e.v);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.weight(v) != 1.0) out += fmt::format("w {} {}\n", v, FormatWeight(g.weight(v)));
  }
  return out;
}

std::string FormatEdgeWeightedGraph(const EdgeWeightedGraph& g) {
  std::string out = fmt::format("ewgraph {} {}\n", g.node_count(), g.edge_count());
  for (const WeightedEdge& e : g.edges()) {
    out += fmt::format("{} {} {}\n", e.u, e.v, FormatWeight(e.weight));
  }
  return out;
}

std::string FormatDag(const WeightedDag& d) {
  std::string out = fmt::format("dag {} {}\n", d.node_count(), d.arc_count());
  for (const Arc& a : d.arcs()) {
    out += fmt::format("{} {} {}\n", a.tail, a.head, FormatWeight(a.weight));
  }
  return out;
}

std::string FormatHypergraph(const EdgeColoredHypergraph& h) {
  std::string out = fmt::format("chg {} {} {}\n", h.node_count(),
                                h.hyperedge_count(), h.color_count());
  for (const ColoredHyperedge& e : h.hyperedges()) {
    out += fmt::format("{} {} {} {}\n", e.color, FormatWeight(e.weight),
                       e.members.size(), fmt::join(e.members, " "));
  }
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace covergrow
