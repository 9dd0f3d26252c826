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

#include <cstdint>
#include <random>
#include <vector>

#include "kplexer/graph.hpp"

namespace kplexer::testing {

/// G(n, p) with a fixed seed; test-only.
inline Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph make_graph(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) edges.push_back({u, static_cast<Vertex>((u + 1) % n)});
  return Graph::from_edges(n, edges);
}

inline Graph from_dense(const DenseGraph& d) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < d.num_vertices(); ++u)
    for (Vertex v = u + 1; v < d.num_vertices(); ++v)
      if (d.adjacent(u, v)) edges.push_back({u, v});
  return Graph::from_edges(d.num_vertices(), edges);
}

/// Random subset of 0..n-1, each vertex kept with probability p.
inline VertexSet random_subset(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (coin(rng)) out.push_back(v);
  return out;
}

}  // namespace kplexer::testing
