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
#include "kplexer/ordering.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

namespace kplexer {

namespace {

template <typename Key>
using MinHeap = std::priority_queue<Key, std::vector<Key>, std::greater<>>;

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

/// CSR slot -> edge id table so peeling can flag edges without hashing.
struct SlotTable {
  std::vector<std::size_t> begin;
  std::vector<std::uint32_t> edge_id;

  explicit SlotTable(const Graph& g) : begin(g.num_vertices() + 1, 0) {
    for (Vertex u = 0; u < g.num_vertices(); ++u) begin[u + 1] = begin[u] + g.degree(u);
    edge_id.resize(begin.back());
    std::uint32_t next = 0;
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
      const auto nb = g.neighbors(u);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        const Vertex v = nb[j];
        if (u < v) {
          edge_id[begin[u] + j] = next++;
        } else {
          const auto vn = g.neighbors(v);
          const auto k = static_cast<std::size_t>(std::lower_bound(vn.begin(), vn.end(), u) - vn.begin());
          edge_id[begin[u] + j] = edge_id[begin[v] + k];
        }
      }
    }
  }
};

}  // namespace

VertexOrdering degeneracy_ordering(const Graph& g) {
  const std::size_t n = g.num_vertices();
  VertexOrdering ord;
  ord.order.reserve(n);
  ord.position.assign(n, kNone);

  std::vector<std::size_t> deg(n);
  MinHeap<std::pair<std::size_t, Vertex>> heap;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    heap.emplace(deg[v], v);
  }
  while (!heap.empty()) {
    const auto [d, v] = heap.top();
    heap.pop();
    if (ord.position[v] != kNone || d != deg[v]) continue;
    ord.position[v] = ord.order.size();
    ord.order.push_back(v);
    ord.degeneracy = std::max(ord.degeneracy, d);
    for (Vertex w : g.neighbors(v)) {
      if (ord.position[w] != kNone) continue;
      heap.emplace(--deg[w], w);
    }
  }
  return ord;
}

EdgeOrdering community_degeneracy_ordering(const Graph& g) {
  const std::vector<Edge> edges = g.edges();
  const SlotTable slots(g);
  std::vector<std::size_t> support(edges.size(), 0);
  std::vector<char> removed(edges.size(), 0);

  // Common neighbors of u and v through edges that are still present.
  auto for_each_common = [&](Vertex u, Vertex v, auto&& f) {
    const auto a = g.neighbors(u);
    const auto b = g.neighbors(v);
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i] < b[j]) {
        ++i;
      } else if (a[i] > b[j]) {
        ++j;
      } else {
        const auto eu = slots.edge_id[slots.begin[u] + i];
        const auto ev = slots.edge_id[slots.begin[v] + j];
        if (!removed[eu] && !removed[ev]) f(eu, ev);
        ++i;
        ++j;
      }
    }
  };

  MinHeap<std::pair<std::size_t, std::uint32_t>> heap;
  for (std::uint32_t e = 0; e < edges.size(); ++e) {
    for_each_common(edges[e].u, edges[e].v, [&](auto, auto) { ++support[e]; });
    heap.emplace(support[e], e);
  }

  EdgeOrdering ord;
  ord.order.reserve(edges.size());
  ord.support_at_removal.reserve(edges.size());
  while (!heap.empty()) {
    const auto [s, e] = heap.top();
    heap.pop();
    if (removed[e] || s != support[e]) continue;
    removed[e] = 1;
    ord.order.push_back(edges[e]);
    ord.support_at_removal.push_back(s);
    ord.community_degeneracy = std::max(ord.community_degeneracy, s);
    for_each_common(edges[e].u, edges[e].v, [&](std::uint32_t eu, std::uint32_t ev) {
      heap.emplace(--support[eu], eu);
      heap.emplace(--support[ev], ev);
    });
  }
  return ord;
}

VertexSet forward_neighbors(const VertexOrdering& ord, const Graph& g, Vertex v) {
  VertexSet out;
  for (Vertex w : g.neighbors(v))
    if (ord.later(w, v)) out.push_back(w);
  return out;
}

VertexSet forward_two_hop(const VertexOrdering& ord, const Graph& g, Vertex v) {
  VertexSet out;
  for (Vertex w : two_hop_neighbors(g, v))
    if (ord.later(w, v)) out.push_back(w);
  return out;
}

EdgeSuffixIndex::EdgeSuffixIndex(const EdgeOrdering& ord, const Graph& g)
    : ord_(&ord), g_(&g), slot_position_(g.num_vertices()), last_incident_(g.num_vertices(), kNone) {
  for (Vertex u = 0; u < g.num_vertices(); ++u) slot_position_[u].assign(g.degree(u), kNone);
  for (std::size_t i = 0; i < ord.order.size(); ++i) {
    const auto [u, v] = ord.order[i];
    const auto nu = g.neighbors(u);
    const auto nv = g.neighbors(v);
    slot_position_[u][std::lower_bound(nu.begin(), nu.end(), v) - nu.begin()] = i;
    slot_position_[v][std::lower_bound(nv.begin(), nv.end(), u) - nv.begin()] = i;
    last_incident_[u] = i;
    last_incident_[v] = i;
  }
}

std::size_t EdgeSuffixIndex::edge_position(Vertex a, Vertex b) const {
  const auto nb = g_->neighbors(a);
  const auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return kNone;
  return slot_position_[a][it - nb.begin()];
}

std::size_t EdgeSuffixIndex::forward_common_count(std::size_t index) const {
  const auto [u, v] = ord_->order[index];
  const auto a = g_->neighbors(u);
  const auto b = g_->neighbors(v);
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t count = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      if (slot_position_[u][i] > index && slot_position_[v][j] > index) ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

ForwardEdgeSets EdgeSuffixIndex::sets(std::size_t index) const {
  const auto [u, v] = ord_->order[index];
  const Graph& g = *g_;
  // Vertex w is in V' iff some edge after `index` touches it.
  auto in_suffix = [&](Vertex w) { return last_incident_[w] != kNone && last_incident_[w] > index; };
  // Neighbors of x in the graph spanned by order[index..].
  auto for_each_live = [&](Vertex x, auto&& f) {
    const auto nb = g.neighbors(x);
    for (std::size_t j = 0; j < nb.size(); ++j)
      if (slot_position_[x][j] != kNone && slot_position_[x][j] >= index) f(nb[j]);
  };

  ForwardEdgeSets out;
  VertexSet nu;
  VertexSet nv;
  for_each_live(u, [&](Vertex w) { nu.push_back(w); });
  for_each_live(v, [&](Vertex w) { nv.push_back(w); });
  VertexSet common;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(common));
  for (Vertex w : common)
    if (in_suffix(w)) out.common.push_back(w);

  // Distance-two sets of u and v in the spanned graph, then the edge formula.
  auto two_hop = [&](Vertex x, const VertexSet& nx) {
    VertexSet reach;
    for (Vertex y : nx) for_each_live(y, [&](Vertex z) { reach.push_back(z); });
    std::sort(reach.begin(), reach.end());
    reach.erase(std::unique(reach.begin(), reach.end()), reach.end());
    VertexSet res;
    for (Vertex z : reach)
      if (z != x && !std::binary_search(nx.begin(), nx.end(), z)) res.push_back(z);
    return res;
  };
  const VertexSet hu = two_hop(u, nu);
  const VertexSet hv = two_hop(v, nv);
  VertexSet uni;
  std::set_union(hu.begin(), hu.end(), hv.begin(), hv.end(), std::back_inserter(uni));
  for (Vertex w : uni)
    if (w != u && w != v && !std::binary_search(common.begin(), common.end(), w) && in_suffix(w))
      out.two_hop.push_back(w);
  return out;
}

ForwardEdgeSets forward_edge_sets(const EdgeOrdering& ord, const Graph& g, std::size_t index) {
  return EdgeSuffixIndex(ord, g).sets(index);
}

VertexSet greedy_lower_bound(const Graph& g, const VertexOrdering& ord, int k) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return {};
  // Replays the peel: the vertex removed at step i has the minimum degree among the suffix
  // order[i..], so that suffix is a k-plex iff this degree is at least |suffix| - k.
  std::vector<std::size_t> deg(n);
  for (Vertex v = 0; v < n; ++v) deg[v] = g.degree(v);
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = ord.order[i];
    const std::size_t remaining = n - i;
    if (deg[v] + static_cast<std::size_t>(k) >= remaining) {
      VertexSet out(ord.order.begin() + static_cast<std::ptrdiff_t>(i), ord.order.end());
      std::sort(out.begin(), out.end());
      return out;
    }
    for (Vertex w : g.neighbors(v))
      if (ord.position[w] > i) --deg[w];
  }
  return {};
}

VertexSet greedy_lower_bound(const Graph& g, int k) { return greedy_lower_bound(g, degeneracy_ordering(g), k); }

}  // namespace kplexer
