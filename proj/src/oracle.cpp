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
#include "kplexer/oracle.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace kplexer {

namespace {

void check_limit(std::size_t n, OracleLimit limit) {
  const std::size_t cap = std::min(limit.max_vertices, OracleLimit::kHardCap);
  if (n > cap) throw OracleRefused("oracle refuses " + std::to_string(n) + " vertices (cap " + std::to_string(cap) + ")");
}

std::vector<std::vector<char>> adjacency_matrix(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : g.neighbors(u)) adj[u][v] = 1;
  return adj;
}

struct MaxKplexSearch {
  const std::vector<std::vector<char>>& adj;
  int k;
  std::vector<char> forced;
  VertexSet current;
  // missing[v]: non-neighbors of v inside current, v itself included when v is in current.
  std::vector<int> missing;
  VertexSet best;
  bool found = false;

  bool can_add(Vertex v) const {
    int own = 1;  // v counts as missing itself
    for (Vertex u : current) {
      if (adj[u][v]) continue;
      if (missing[u] + 1 > k) return false;
      ++own;
    }
    return own <= k;
  }

  void add(Vertex v) {
    for (Vertex u : current)
      if (!adj[u][v]) ++missing[u];
    missing[v] = 1;
    for (Vertex u : current)
      if (!adj[u][v]) ++missing[v];
    current.push_back(v);
  }

  void pop() {
    const Vertex v = current.back();
    current.pop_back();
    for (Vertex u : current)
      if (!adj[u][v]) --missing[u];
    missing[v] = 0;
  }

  // Includes or skips vertices in increasing id order, so the first maximum set reached is
  // the lexicographically smallest one.
  void run(Vertex next) {
    const auto n = static_cast<Vertex>(adj.size());
    if (next == n) {
      if (!found || current.size() > best.size()) {
        best = current;
        found = true;
      }
      return;
    }
    if (found) {
      if (current.size() + (n - next) <= best.size()) return;
    }
    if (forced[next]) {
      if (!can_add(next)) return;
      add(next);
      run(next + 1);
      pop();
      return;
    }
    if (can_add(next)) {
      add(next);
      run(next + 1);
      pop();
    }
    run(next + 1);
  }
};

}  // namespace

bool is_kplex(const Graph& g, const VertexSet& members, int k) {
  for (Vertex v : members)
    if (v >= g.num_vertices()) throw GraphError("vertex out of range");
  VertexSet sorted = members;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  const long need = static_cast<long>(sorted.size()) - k;
  for (Vertex v : sorted) {
    long inside = 0;
    for (Vertex w : g.neighbors(v)) inside += std::binary_search(sorted.begin(), sorted.end(), w) ? 1 : 0;
    if (inside < need) return false;
  }
  return true;
}

OracleKplex brute_force_max_kplex(const Graph& g, int k, const std::optional<VertexSet>& anchor, OracleLimit limit) {
  check_limit(g.num_vertices(), limit);
  if (k < 1) throw std::invalid_argument("k must be positive");
  const auto adj = adjacency_matrix(g);
  MaxKplexSearch s{adj, k, std::vector<char>(g.num_vertices(), 0), {}, std::vector<int>(g.num_vertices(), 0), {}, false};
  if (anchor) {
    for (Vertex v : *anchor) {
      if (v >= g.num_vertices()) throw GraphError("anchor vertex out of range");
      s.forced[v] = 1;
    }
    VertexSet a = *anchor;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (!is_kplex(g, a, k)) return {};
  }
  s.run(0);
  if (!s.found) return {};
  return {s.best.size(), s.best};
}

std::optional<std::size_t> brute_force_min_dbdd(const Graph& g, int max_degree, const VertexSet& candidates,
                                                OracleLimit limit) {
  VertexSet c = candidates;
  std::sort(c.begin(), c.end());
  c.erase(std::unique(c.begin(), c.end()), c.end());
  check_limit(c.size(), limit);
  for (Vertex v : c)
    if (v >= g.num_vertices()) throw GraphError("candidate out of range");

  const std::size_t n = g.num_vertices();
  const std::size_t q = c.size();
  std::vector<char> removed(n, 0);
  auto bounded = [&] {
    for (Vertex v = 0; v < n; ++v) {
      if (removed[v]) continue;
      int d = 0;
      for (Vertex w : g.neighbors(v)) d += removed[w] ? 0 : 1;
      if (d > max_degree) return false;
    }
    return true;
  };
  for (std::size_t size = 0; size <= q; ++size) {
    // Walk all size-element subsets of c via an index vector.
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      for (std::size_t i : idx) removed[c[i]] = 1;
      const bool ok = bounded();
      for (std::size_t i : idx) removed[c[i]] = 0;
      if (ok) return size;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == q - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace kplexer
