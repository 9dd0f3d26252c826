/*
Copyright 2026 The kplexer Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/
#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kplexer/bitset.hpp"

namespace kplexer {

using Vertex = std::uint32_t;
using Label = std::uint64_t;

/// Strictly increasing list of vertex ids.
using VertexSet = std::vector<Vertex>;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Immutable undirected simple graph in compressed sparse row layout.
///
/// Vertices are dense ids 0..n-1. Each neighbor list is strictly sorted, the adjacency is
/// symmetric and loop-free, and the original input identifiers are kept in labels().
class Graph {
 public:
  Graph() : offsets_(1, 0) {}

  /// Builds from an arbitrary edge list over 0..n-1. Loops are dropped, duplicates and
  /// reversed pairs merged. An empty `labels` means labels equal ids.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Label> labels = {});

  std::size_t num_vertices() const { return offsets_.size() - 1; }
  std::size_t num_edges() const { return neighbors_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  Label label(Vertex v) const { return labels_.empty() ? Label{v} : labels_[v]; }
  const std::vector<Label>& labels() const { return labels_; }

  /// Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Dense adjacency-matrix view of the whole graph.
  DenseGraph to_dense() const;
  /// Dense view of the subgraph induced by `vertices`; local id i is vertices[i].
  DenseGraph to_dense(std::span<const Vertex> vertices) const;

  /// Throws GraphError if any structural invariant is violated.
  void check_invariants() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> neighbors_;
  std::vector<Label> labels_;
};

enum class GraphFormat { edge_list, dimacs };

/// ".clq" and ".dimacs" select DIMACS, anything else the edge-list reader.
GraphFormat detect_format(const std::filesystem::path& path);

/// Edge list: whitespace separated id pairs, '#' and '%' lines ignored. Labels are
/// compacted in increasing order. DIMACS: "p edge n m" header and 1-indexed "e u v" lines.
Graph parse_graph(std::istream& in, GraphFormat format);
Graph read_graph(const std::filesystem::path& path, GraphFormat format);
Graph read_graph(const std::filesystem::path& path);

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment = {});

struct InducedSubgraph {
  Graph graph;
  /// to_parent[i] is the id in the source graph of local vertex i.
  std::vector<Vertex> to_parent;
};

/// Subgraph induced by `s`, local ids following the order of `s`.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

Graph complement(const Graph& g);

/// Vertices at distance exactly two from v.
VertexSet two_hop_neighbors(const Graph& g, Vertex v);

/// N(u) ∩ N(v) for the edge {u, v}.
VertexSet edge_common_neighbors(const Graph& g, Edge e);
/// (N²(u) ∪ N²(v)) \ ({u, v} ∪ N(u) ∩ N(v)) for the edge {u, v}.
VertexSet edge_two_hop(const Graph& g, Edge e);

}  // namespace kplexer
