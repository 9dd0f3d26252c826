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
#include "kplexer/reduce.hpp"

#include <algorithm>

namespace kplexer {

namespace {

class Reducer {
 public:
  Reducer(DenseGraph& g, Bitset& alive, const Bitset& anchor, int k, int p)
      : g_(g), alive_(alive), anchor_(anchor), k_(k), p_(p) {}

  bool anchor_lost() const { return lost_; }

  void drop_vertex(std::size_t u) {
    g_.isolate(u);
    alive_.reset(u);
    if (anchor_.test(u)) lost_ = true;
    changed_ = true;
  }

  void drop_edge(std::size_t u, std::size_t v) {
    g_.remove_edge(u, v);
    changed_ = true;
  }

  long common(std::size_t u, std::size_t v) const { return static_cast<long>(bits::count_and(g_.row(u), g_.row(v))); }
  long common(std::size_t a, std::size_t u, std::size_t v) const {
    return static_cast<long>(bits::count_and(g_.row(a), g_.row(u), g_.row(v)));
  }

  // Phase a: first-order vertex rule and the adjacent-pair edge rule over the whole graph.
  bool global_phase(bool pairs) {
    bool any = false;
    do {
      changed_ = false;
      const long vertex_threshold = p_ - k_;
      alive_.for_each([&](std::size_t u) {
        if (!lost_ && static_cast<long>(g_.degree(u)) < vertex_threshold) drop_vertex(u);
      });
      if (lost_) return true;
      const long edge_threshold = p_ - 2L * k_;
      if (pairs && edge_threshold > 0) {
        alive_.for_each([&](std::size_t u) {
          bits::for_each(g_.row(u), [&](std::size_t v) {
            if (v > u && common(u, v) < edge_threshold) drop_edge(u, v);
          });
        });
      }
      any = any || changed_;
    } while (changed_);
    return any;
  }

  // Phases b and c around one seed vertex.
  bool seed_phases(std::size_t seed) {
    if (!alive_.test(seed)) {
      lost_ = true;
      return true;
    }
    Bitset hop1(g_.num_vertices());
    bits::for_each(g_.row(seed), [&](std::size_t u) { hop1.set(u); });
    Bitset hop2(g_.num_vertices());
    hop1.for_each([&](std::size_t u) { bits::for_each(g_.row(u), [&](std::size_t w) { hop2.set(w); }); });
    hop2.and_not(hop1);
    hop2.reset(seed);

    // Thresholds follow the higher-order rule for P = {seed, u} or {seed, u, v}.
    auto pair_threshold = [&](std::size_t u) { return p_ - 2L * k_ + (g_.adjacent(seed, u) ? 0 : 2); };
    auto triple_threshold = [&](std::size_t u, std::size_t v) {
      const long lambda = 1 + (g_.adjacent(seed, u) ? 1 : 0) + (g_.adjacent(seed, v) ? 1 : 0);
      return p_ - 3L * k_ + 6 - 2 * lambda;
    };

    auto vertex_pass = [&](const Bitset& xs) {
      xs.for_each([&](std::size_t u) {
        if (!lost_ && alive_.test(u) && common(seed, u) < pair_threshold(u)) drop_vertex(u);
      });
    };
    auto edge_pass = [&](const Bitset& left, const Bitset& right, bool same) {
      left.for_each([&](std::size_t u) {
        if (!alive_.test(u)) return;
        bits::for_each(g_.row(u), [&](std::size_t v) {
          if (!right.test(v) || (same && v < u)) return;
          if (common(seed, u, v) < triple_threshold(u, v)) drop_edge(u, v);
        });
      });
    };

    bool any = false;
    do {
      changed_ = false;
      vertex_pass(hop1);
      if (lost_) return true;
      edge_pass(hop1, hop1, true);
      any = any || changed_;
    } while (changed_);
    do {
      changed_ = false;
      vertex_pass(hop2);
      if (lost_) return true;
      edge_pass(hop1, hop2, false);
      edge_pass(hop2, hop2, true);
      any = any || changed_;
    } while (changed_);
    return any;
  }

 private:
  DenseGraph& g_;
  Bitset& alive_;
  const Bitset& anchor_;
  int k_;
  int p_;
  bool lost_ = false;
  bool changed_ = false;
};

}  // namespace

bool higher_order_check(const DenseGraph& g, const Bitset& alive, const Bitset& members, int k, int p) {
  const std::size_t n = members.count();
  if (n == 0) return true;
  std::vector<Word> common(alive.words().begin(), alive.words().end());
  std::size_t twice_lambda = 0;
  members.for_each([&](std::size_t u) {
    const auto row = g.row(u);
    for (std::size_t i = 0; i < common.size(); ++i) common[i] &= row[i];
    twice_lambda += bits::count_and(row, members.words());
  });
  const long threshold = p - static_cast<long>(n) * k + static_cast<long>(n * (n - 1)) - static_cast<long>(twice_lambda);
  return static_cast<long>(bits::count(common)) >= threshold;
}

bool higher_order_check(const Graph& g, const VertexSet& members, int k, int p) {
  if (members.empty()) return true;
  for (Vertex v : members)
    if (v >= g.num_vertices()) throw GraphError("vertex out of range");
  const std::size_t n = members.size();
  std::size_t lambda = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) lambda += g.adjacent(members[i], members[j]) ? 1 : 0;
  // Common neighbors outside P: walk the neighbors of the first member.
  long common = 0;
  for (Vertex w : g.neighbors(members[0])) {
    if (std::binary_search(members.begin(), members.end(), w)) continue;
    bool all = true;
    for (std::size_t i = 1; i < n && all; ++i) all = g.adjacent(members[i], w);
    common += all ? 1 : 0;
  }
  const long threshold = p - static_cast<long>(n) * k + static_cast<long>(n * (n - 1)) - 2 * static_cast<long>(lambda);
  return common >= threshold;
}

bool reduce_in_place(DenseGraph& graph, Bitset& alive, const Bitset& anchor, std::span<const std::size_t> seeds,
                     int k, int p, const ReduceOptions& opts) {
  // Dead vertices must not contribute to any count.
  for (std::size_t u = 0; u < graph.num_vertices(); ++u)
    if (!alive.test(u)) graph.isolate(u);

  Reducer r(graph, alive, anchor, k, p);
  bool changed = true;
  while (changed && !r.anchor_lost()) {
    changed = r.global_phase(opts.higher_order);
    if (!opts.higher_order || r.anchor_lost()) break;
    for (std::size_t s : seeds) {
      changed = r.seed_phases(s) || changed;
      if (r.anchor_lost()) break;
    }
  }
  if (r.anchor_lost()) return false;
  if (alive.count() < static_cast<std::size_t>(std::max(p, 0))) return false;
  if (opts.higher_order && !higher_order_check(graph, alive, anchor, k, p)) return false;
  return true;
}

Subproblem make_subproblem(const Graph& g, std::span<const Vertex> seeds, std::span<const Vertex> extra,
                           std::span<const Vertex> forward, int k, int p) {
  Subproblem sub;
  sub.to_parent.reserve(seeds.size() + extra.size() + forward.size());
  sub.to_parent.insert(sub.to_parent.end(), seeds.begin(), seeds.end());
  sub.to_parent.insert(sub.to_parent.end(), extra.begin(), extra.end());
  sub.to_parent.insert(sub.to_parent.end(), forward.begin(), forward.end());
  const std::size_t n = sub.to_parent.size();
  sub.graph = g.to_dense(sub.to_parent);
  sub.anchor = Bitset(n);
  sub.candidates = Bitset(n);
  const std::size_t fixed = seeds.size() + extra.size();
  for (std::size_t i = 0; i < n; ++i) (i < fixed ? sub.anchor : sub.candidates).set(i);
  for (std::size_t i = 0; i < seeds.size(); ++i) sub.seeds.push_back(i);
  sub.k = k;
  sub.p = p;
  return sub;
}

Subproblem reduce_subproblem(const Subproblem& sub, const ReduceOptions& opts) {
  const std::size_t n = sub.graph.num_vertices();
  DenseGraph g = sub.graph;
  Bitset alive = Bitset::full(n);
  Subproblem out;
  out.k = sub.k;
  out.p = sub.p;
  if (!reduce_in_place(g, alive, sub.anchor, sub.seeds, sub.k, sub.p, opts)) {
    out.anchor = Bitset(0);
    out.candidates = Bitset(0);
    return out;
  }
  std::vector<std::size_t> local(n, 0);
  std::size_t next = 0;
  alive.for_each([&](std::size_t u) {
    local[u] = next++;
    out.to_parent.push_back(sub.to_parent[u]);
  });
  out.graph = g.induced(alive);
  out.anchor = Bitset(next);
  out.candidates = Bitset(next);
  alive.for_each([&](std::size_t u) {
    if (sub.anchor.test(u)) out.anchor.set(local[u]);
    if (sub.candidates.test(u)) out.candidates.set(local[u]);
  });
  for (std::size_t s : sub.seeds) out.seeds.push_back(local[s]);
  return out;
}

long PartitionState::bound(bool clamp_terms) const {
  long total = static_cast<long>(residue.size());
  for (const auto& b : blocks) total += static_cast<long>(b.size());
  long kept = 0;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    long term = std::min<long>(max_degree - deltas[i], static_cast<long>(blocks[i].size()));
    if (clamp_terms) term = std::max<long>(term, 0);
    kept += term;
  }
  return total - static_cast<long>(residue.size()) - kept;
}

PartitionState partition_state(const Graph& g, int max_degree, const VertexSet& candidates) {
  const std::size_t n = g.num_vertices();
  std::vector<char> in_c(n, 0);
  for (Vertex v : candidates) {
    if (v >= n) throw GraphError("candidate out of range");
    in_c[v] = 1;
  }
  PartitionState st;
  st.max_degree = max_degree;
  std::vector<std::pair<int, Vertex>> order;
  for (Vertex v = 0; v < n; ++v) {
    if (in_c[v]) continue;
    int delta = 0;
    for (Vertex w : g.neighbors(v)) delta += in_c[w] ? 0 : 1;
    order.emplace_back(delta, v);
  }
  std::sort(order.begin(), order.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });
  std::vector<char> claimed(n, 0);
  for (const auto& [delta, v] : order) {
    st.pivots.push_back(v);
    st.deltas.push_back(delta);
    VertexSet block;
    for (Vertex w : g.neighbors(v)) {
      if (in_c[w] && !claimed[w]) {
        claimed[w] = 1;
        block.push_back(w);
      }
    }
    st.blocks.push_back(std::move(block));
  }
  for (Vertex v : candidates)
    if (!claimed[v]) st.residue.push_back(v);
  std::sort(st.residue.begin(), st.residue.end());
  st.residue.erase(std::unique(st.residue.begin(), st.residue.end()), st.residue.end());
  return st;
}

}  // namespace kplexer
