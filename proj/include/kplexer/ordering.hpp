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
#include <utility>
#include <vector>

#include "kplexer/graph.hpp"

namespace kplexer {

/// Min-degree peeling order. order[i] is the i-th vertex removed and position is its inverse.
struct VertexOrdering {
  std::vector<Vertex> order;
  std::vector<std::size_t> position;
  std::size_t degeneracy = 0;

  bool later(Vertex a, Vertex b) const { return position[a] > position[b]; }
};

/// Min-support edge peeling order, support being the number of triangles an edge closes in
/// the remaining graph.
struct EdgeOrdering {
  std::vector<Edge> order;
  /// Support of order[i] at the moment it was removed.
  std::vector<std::size_t> support_at_removal;
  std::size_t community_degeneracy = 0;
};

/// Ties on the minimum degree go to the smallest vertex id.
VertexOrdering degeneracy_ordering(const Graph& g);

/// Ties on the minimum support go to the lexicographically smallest edge.
EdgeOrdering community_degeneracy_ordering(const Graph& g);

/// Neighbors of v that come later in the ordering.
VertexSet forward_neighbors(const VertexOrdering& ord, const Graph& g, Vertex v);
/// Vertices at distance two from v in g that come later in the ordering.
VertexSet forward_two_hop(const VertexOrdering& ord, const Graph& g, Vertex v);

/// Forward sets of the edge at `index` in the ordering.
///
/// Neighborhoods are taken in the graph spanned by order[index..] and both sets are
/// restricted to endpoints of order[index+1..].
struct ForwardEdgeSets {
  VertexSet common;    ///< N⁺(e)
  VertexSet two_hop;   ///< N²⁺(e)
};
ForwardEdgeSets forward_edge_sets(const EdgeOrdering& ord, const Graph& g, std::size_t index);

/// Reusable evaluator for forward_edge_sets over one ordering; avoids rebuilding the
/// position table for each edge.
class EdgeSuffixIndex {
 public:
  EdgeSuffixIndex(const EdgeOrdering& ord, const Graph& g);

  ForwardEdgeSets sets(std::size_t index) const;
  /// |N⁺(e)| without materializing the sets.
  std::size_t forward_common_count(std::size_t index) const;

 private:
  std::size_t edge_position(Vertex a, Vertex b) const;

  const EdgeOrdering* ord_;
  const Graph* g_;
  /// Position in the ordering of each adjacency slot of g, parallel to g's CSR layout.
  std::vector<std::vector<std::size_t>> slot_position_;
  /// Largest position of an edge incident to each vertex.
  std::vector<std::size_t> last_incident_;
};

/// Largest suffix of the degeneracy peel that is a k-plex. Empty only for the empty graph.
VertexSet greedy_lower_bound(const Graph& g, const VertexOrdering& ord, int k);
VertexSet greedy_lower_bound(const Graph& g, int k);

}  // namespace kplexer
