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
#include "kplexer/heuristic.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <random>

#include "kplexer/bitset.hpp"

namespace kplexer {

namespace {

/// Vertices whose degree stays at least `min_degree` after repeated peeling.
VertexSet core_at_least(const Graph& g, std::size_t min_degree) {
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> deg(n);
  std::vector<char> gone(n, 0);
  std::vector<Vertex> stack;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] < min_degree) {
      gone[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (gone[w]) continue;
      if (--deg[w] < min_degree) {
        gone[w] = 1;
        stack.push_back(w);
      }
    }
  }
  VertexSet out;
  for (Vertex v = 0; v < n; ++v)
    if (!gone[v]) out.push_back(v);
  return out;
}

class Search {
 public:
  Search(const DenseGraph& g, int k, std::uint64_t seed)
      : g_(g), k_(k), n_(g.num_vertices()), in_(n_), sat_(n_), miss_(n_, 0), tabu_(n_, 0), rng_(seed) {}

  void load(const std::vector<std::size_t>& members) {
    for (std::size_t v : members) add(v);
  }

  std::vector<std::size_t> run(std::uint64_t iterations) {
    std::vector<std::size_t> best = members();
    std::uint64_t stale = 0;
    for (std::uint64_t it = 1; it <= iterations; ++it) {
      grow(it);
      if (size_ > best.size()) {
        best = members();
        stale = 0;
      } else if (++stale > 4 * n_ + 100) {
        reset_to(best);
        stale = 0;
      }
      perturb(it);
    }
    grow(iterations + 1);
    if (size_ > best.size()) best = members();
    return best;
  }

 private:
  std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    in_.for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

  void reset_to(const std::vector<std::size_t>& set) {
    for (std::size_t v : members()) remove(v);
    for (std::size_t v : set) add(v);
  }

  // Non-neighbors of v inside the current set that are already at k - 1 misses.
  std::size_t blocked(std::size_t v) const { return sat_.count() - bits::count_and(sat_.words(), g_.row(v)); }

  bool addable(std::size_t v) const {
    return !in_.test(v) && miss_[v] <= k_ - 1 && blocked(v) == 0;
  }

  void add(std::size_t v) {
    in_.set(v);
    ++size_;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x == v || g_.adjacent(v, x)) continue;
      ++miss_[x];
      if (in_.test(x) && miss_[x] >= k_ - 1) sat_.set(x);
    }
    if (miss_[v] >= k_ - 1) sat_.set(v);
  }

  void remove(std::size_t v) {
    in_.reset(v);
    sat_.reset(v);
    --size_;
    for (std::size_t x = 0; x < n_; ++x) {
      if (x == v || g_.adjacent(v, x)) continue;
      --miss_[x];
      if (in_.test(x) && miss_[x] < k_ - 1) sat_.reset(x);
    }
  }

  template <typename Score>
  std::optional<std::size_t> pick(Score score) {
    long best = std::numeric_limits<long>::max();
    std::size_t ties = 0;
    std::size_t chosen = 0;
    for (std::size_t v = 0; v < n_; ++v) {
      const auto s = score(v);
      if (!s) continue;
      if (*s < best) {
        best = *s;
        ties = 1;
        chosen = v;
      } else if (*s == best && std::uniform_int_distribution<std::size_t>(0, ties++)(rng_) == 0) {
        chosen = v;
      }
    }
    if (ties == 0) return std::nullopt;
    return chosen;
  }

  void grow(std::uint64_t it) {
    for (;;) {
      const auto v = pick([&](std::size_t x) -> std::optional<long> {
        if (tabu_[x] >= it || !addable(x)) return std::nullopt;
        return miss_[x];
      });
      if (!v) return;
      add(*v);
    }
  }

  // Forces in an outside vertex with few conflicts, then removes members until the set is a
  // k-plex again. Removed vertices stay out for a while.
  void perturb(std::uint64_t it) {
    const auto v = pick([&](std::size_t x) -> std::optional<long> {
      if (in_.test(x) || tabu_[x] >= it) return std::nullopt;
      return static_cast<long>(blocked(x)) + std::max(0, miss_[x] - (k_ - 1));
    });
    if (!v) return;
    add(*v);
    for (;;) {
      const bool v_over = miss_[*v] > k_ - 1;
      const auto u = pick([&](std::size_t x) -> std::optional<long> {
        if (x == *v || !in_.test(x)) return std::nullopt;
        if (v_over) {
          if (g_.adjacent(x, *v)) return std::nullopt;
        } else if (miss_[x] <= k_ - 1) {
          return std::nullopt;
        }
        return -static_cast<long>(miss_[x]);
      });
      if (!u) break;
      remove(*u);
      tabu_[*u] = it + 7 + std::uniform_int_distribution<std::uint64_t>(0, 9)(rng_);
    }
  }

  const DenseGraph& g_;
  int k_;
  std::size_t n_;
  Bitset in_;
  Bitset sat_;
  std::vector<int> miss_;
  std::vector<std::uint64_t> tabu_;
  std::size_t size_ = 0;
  std::mt19937_64 rng_;
};

}  // namespace

VertexSet local_search_kplex(const Graph& g, int k, const VertexSet& start, const LocalSearchOptions& opts) {
  const std::size_t floor = start.size() + 1 > static_cast<std::size_t>(k) ? start.size() + 1 - k : 0;
  const VertexSet core = core_at_least(g, floor);
  if (core.size() <= start.size() || core.size() > opts.max_core) return start;

  const DenseGraph dense = g.to_dense(core);
  Search search(dense, k, opts.seed);
  // Members of the start set that survived the peel seed the search.
  std::vector<std::size_t> seed;
  for (Vertex v : start) {
    const auto it = std::lower_bound(core.begin(), core.end(), v);
    if (it != core.end() && *it == v) seed.push_back(static_cast<std::size_t>(it - core.begin()));
  }
  search.load(seed);
  std::uint64_t iterations = opts.max_iterations;
  if (iterations == 0) {
    const std::uint64_t cost = core.size() * (dense.stride() + 4);
    iterations = std::clamp<std::uint64_t>(400'000'000ULL / (cost * core.size()), 200, 20'000);
  }
  const std::vector<std::size_t> found = search.run(iterations);
  if (found.size() <= start.size()) return start;
  VertexSet out;
  for (std::size_t i : found) out.push_back(core[i]);
  return out;
}

}  // namespace kplexer
