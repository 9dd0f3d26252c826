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
#include <span>
#include <vector>

#include "kplexer/bitset.hpp"
#include "kplexer/graph.hpp"

namespace kplexer {

/// Anchored subproblem graph G_s. Local vertex i stands for to_parent[i] in the input graph.
///
/// The anchor (the seed vertex or edge plus the chosen 2-hop set) must survive; the
/// candidates are the forward neighbors the search may drop.
struct Subproblem {
  DenseGraph graph;
  std::vector<Vertex> to_parent;
  Bitset anchor;
  Bitset candidates;
  /// Local ids of the seed vertices: {v_i} in vertex mode, {u, v} in edge mode.
  std::vector<std::size_t> seeds;
  int k = 1;
  int p = 0;

  bool empty() const { return graph.num_vertices() == 0; }
};

/// Builds G[seeds ∪ extra ∪ forward] with local ids in that order.
Subproblem make_subproblem(const Graph& g, std::span<const Vertex> seeds, std::span<const Vertex> extra,
                           std::span<const Vertex> forward, int k, int p);

struct ReduceOptions {
  /// When false only the first-order vertex rule runs (no pair, triple or anchor tests).
  bool higher_order = true;
};

/// Reduces `graph` restricted to `alive` in place. Deleted vertices are isolated and dropped
/// from `alive`; deleted edges are cleared from the matrix. Returns false when no k-plex of
/// size at least p can contain all of `anchor`.
bool reduce_in_place(DenseGraph& graph, Bitset& alive, const Bitset& anchor, std::span<const std::size_t> seeds,
                     int k, int p, const ReduceOptions& opts = {});

/// Reduced copy of `sub`, compacted to the surviving vertices. Empty when the anchor is
/// ruled out.
Subproblem reduce_subproblem(const Subproblem& sub, const ReduceOptions& opts = {});

/// False iff |∩_{u∈P} N(u) \ P| < p - nk + n(n-1) - 2λ with n = |P| and λ = |E(G[P])|,
/// i.e. P cannot be part of a k-plex of size p. Only vertices in `alive` are counted.
bool higher_order_check(const DenseGraph& g, const Bitset& alive, const Bitset& members, int k, int p);
bool higher_order_check(const Graph& g, const VertexSet& members, int k, int p);

/// Greedy partition of the candidates C behind the minimum d-bdd lower bound.
struct PartitionState {
  /// The non-candidates, by decreasing δ and then id.
  std::vector<Vertex> pivots;
  /// δ_i = |S ∩ N(pivots[i])|.
  std::vector<int> deltas;
  /// blocks[i] = π_{i+1}: the candidates adjacent to pivots[i] not claimed by earlier pivots.
  std::vector<VertexSet> blocks;
  /// π_0: candidates adjacent to no pivot.
  VertexSet residue;
  int max_degree = 0;

  long bound(bool clamp_terms = false) const;
};

PartitionState partition_state(const Graph& g, int max_degree, const VertexSet& candidates);

}  // namespace kplexer
