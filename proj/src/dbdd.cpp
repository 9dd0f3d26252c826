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
#include "kplexer/dbdd.hpp"

#include <algorithm>
#include <functional>
#include <utility>

namespace kplexer {

SearchStats& SearchStats::operator+=(const SearchStats& o) {
  nodes += o.nodes;
  branch_events += o.branch_events;
  child_total += o.child_total;
  pruned_by_bound += o.pruned_by_bound;
  max_depth = std::max(max_depth, o.max_depth);
  max_fanout = std::max(max_fanout, o.max_fanout);
  return *this;
}

namespace {

struct PartitionScratch {
  std::vector<std::pair<int, std::uint32_t>> pivots;
  std::vector<Word> rest;
  std::vector<Word> outside;
};

long partition_bound_impl(const DenseGraph& g, int d, std::span<const Word> alive, std::span<const Word> cand,
                          bool clamp, PartitionScratch& scratch) {
  const std::size_t words = g.stride();
  scratch.outside.resize(words);
  scratch.rest.assign(cand.begin(), cand.end());
  for (std::size_t i = 0; i < words; ++i) scratch.outside[i] = alive[i] & ~cand[i];

  // Pivots are the non-candidates, taken in decreasing order of their degree inside S.
  scratch.pivots.clear();
  bits::for_each(scratch.outside, [&](std::size_t v) {
    const int delta = static_cast<int>(bits::count_and(g.row(v), scratch.outside));
    scratch.pivots.emplace_back(delta, static_cast<std::uint32_t>(v));
  });
  std::sort(scratch.pivots.begin(), scratch.pivots.end(),
            [](const auto& a, const auto& b) { return a.first != b.first ? a.first > b.first : a.second < b.second; });

  const long total = static_cast<long>(bits::count(cand));
  long kept = 0;
  for (const auto& [delta, v] : scratch.pivots) {
    const auto row = g.row(v);
    long block = 0;
    for (std::size_t i = 0; i < words; ++i) {
      block += std::popcount(scratch.rest[i] & row[i]);
      scratch.rest[i] &= ~row[i];
    }
    long term = std::min<long>(d - delta, block);
    if (clamp) term = std::max<long>(term, 0);
    kept += term;
  }
  const long residue = static_cast<long>(bits::count(scratch.rest));
  return total - residue - kept;
}

class DbddSearch {
 public:
  DbddSearch(const DbddInstance& inst, const DbddOptions& opts, SearchStats& stats)
      : g_(inst.graph),
        d_(inst.max_degree),
        opts_(opts),
        stats_(stats),
        alive_(Bitset::full(inst.graph.num_vertices())),
        cand_(inst.candidates),
        high_(inst.graph.num_vertices()),
        outside_(inst.graph.num_vertices()),
        deg_(inst.graph.num_vertices()),
        deleted_(inst.growing) {
    for (std::size_t v = 0; v < g_.num_vertices(); ++v) deg_[v] = static_cast<int>(g_.degree(v));
    cand_ &= alive_;
  }

  std::optional<std::vector<Vertex>> run(int budget) {
    if (node(budget, 0)) return deleted_;
    return std::nullopt;
  }

 private:
  enum class OpKind : std::uint8_t { remove, exclude };
  struct Op {
    OpKind kind;
    std::uint32_t v;
  };

  // Only candidates are ever removed, so undo restores the candidate flag too.
  void remove(std::size_t w) {
    alive_.reset(w);
    cand_.reset(w);
    bits::for_each(g_.row(w), [&](std::size_t x) {
      if (alive_.test(x)) --deg_[x];
    });
    deleted_.push_back(static_cast<Vertex>(w));
    log_.push_back({OpKind::remove, static_cast<std::uint32_t>(w)});
  }

  void exclude(std::size_t u) {
    cand_.reset(u);
    log_.push_back({OpKind::exclude, static_cast<std::uint32_t>(u)});
  }

  void undo(std::size_t mark) {
    while (log_.size() > mark) {
      const Op op = log_.back();
      log_.pop_back();
      if (op.kind == OpKind::exclude) {
        cand_.set(op.v);
      } else {
        deleted_.pop_back();
        alive_.set(op.v);
        cand_.set(op.v);
        bits::for_each(g_.row(op.v), [&](std::size_t x) {
          if (alive_.test(x)) ++deg_[x];
        });
      }
    }
  }

  void poll() {
    ++stats_.nodes;
    if (opts_.deadline != nullptr && stats_.nodes % opts_.check_interval == 0) opts_.deadline->check();
  }

  // Some non-candidate has more than d non-candidate neighbors.
  bool outside_overloaded() const {
    const auto alive = alive_.words();
    const auto cand = cand_.words();
    bool bad = false;
    for (std::size_t w = 0; w < alive.size() && !bad; ++w) {
      Word x = alive[w] & ~cand[w];
      while (x != 0 && !bad) {
        const std::size_t u = w * kWordBits + static_cast<std::size_t>(std::countr_zero(x));
        x &= x - 1;
        const auto row = g_.row(u);
        int c = 0;
        for (std::size_t i = 0; i < alive.size(); ++i) c += std::popcount(row[i] & alive[i] & ~cand[i]);
        bad = c > d_;
      }
    }
    return bad;
  }

  // Every surviving vertex sheds its excess over d through deleted neighbors, and deleting
  // w removes its own excess plus at most one unit from each overloaded neighbor. True when
  // t deletions cannot cover the total excess.
  bool excess_bound(int t) {
    high_.clear();
    long total = 0;
    alive_.for_each([&](std::size_t v) {
      if (deg_[v] > d_) {
        high_.set(v);
        total += deg_[v] - d_;
      }
    });
    caps_.clear();
    cand_.for_each([&](std::size_t w) {
      caps_.push_back(std::max(deg_[w] - d_, 0) + static_cast<int>(bits::count_and(g_.row(w), high_.words())));
    });
    const std::size_t take = std::min(caps_.size(), static_cast<std::size_t>(std::max(t, 0)));
    std::partial_sort(caps_.begin(), caps_.begin() + static_cast<std::ptrdiff_t>(take), caps_.end(), std::greater<>());
    for (std::size_t i = 0; i < take && total > 0; ++i) total -= caps_[i];
    return total > 0;
  }

  bool node(int t, int depth) {
    poll();
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const std::size_t mark = log_.size();
    auto fail = [&] {
      undo(mark);
      return false;
    };

    std::size_t pivot = 0;
    for (;;) {
      if (t < 0 || outside_overloaded()) return fail();

      int max_deg = -1;
      alive_.for_each([&](std::size_t v) {
        if (deg_[v] > max_deg) {
          max_deg = deg_[v];
          pivot = v;
        }
      });
      if (max_deg <= d_) return true;

      // A candidate with more than d + t neighbors must be deleted.
      bool changed = false;
      cand_.for_each([&](std::size_t u) {
        if (t >= 0 && cand_.test(u) && deg_[u] > d_ + t) {
          remove(u);
          --t;
          ++stats_.nodes;
          changed = true;
        }
      });
      if (changed) continue;

      // A candidate that cannot be kept next to the non-candidates must be deleted: it would
      // exceed d itself, or push a saturated non-candidate past d.
      outside_ = alive_;
      outside_.and_not(cand_);
      high_.clear();
      outside_.for_each([&](std::size_t v) {
        if (static_cast<int>(bits::count_and(g_.row(v), outside_.words())) >= d_) high_.set(v);
      });
      cand_.for_each([&](std::size_t u) {
        if (t < 0) return;
        if (static_cast<int>(bits::count_and(g_.row(u), outside_.words())) > d_ ||
            bits::intersects(g_.row(u), high_.words())) {
          remove(u);
          --t;
          ++stats_.nodes;
          changed = true;
        }
      });
      if (changed) continue;

      // A candidate whose closed neighborhood is already within the degree bound can be
      // kept out of some optimal deletion set.
      high_.clear();
      alive_.for_each([&](std::size_t v) {
        if (deg_[v] > d_) high_.set(v);
      });
      cand_.for_each([&](std::size_t u) {
        if (deg_[u] <= d_ && !bits::intersects(g_.row(u), high_.words())) {
          exclude(u);
          ++stats_.nodes;
          changed = true;
        }
      });
      if (!changed) break;
    }

    if (opts_.bound_enabled &&
        (partition_bound_impl(g_, d_, alive_.words(), cand_.words(), opts_.clamp_partition_terms, scratch_) > t ||
         excess_bound(t))) {
      ++stats_.pruned_by_bound;
      return fail();
    }

    // Branch on the maximum-degree vertex; its candidate neighbors are visited by
    // decreasing degree, ties by smallest id.
    std::vector<std::uint32_t> nb;
    int outside = 0;
    bits::for_each(g_.row(pivot), [&](std::size_t x) {
      if (!alive_.test(x)) return;
      if (cand_.test(x))
        nb.push_back(static_cast<std::uint32_t>(x));
      else
        ++outside;
    });
    std::sort(nb.begin(), nb.end(),
              [&](std::uint32_t a, std::uint32_t b) { return deg_[a] != deg_[b] ? deg_[a] > deg_[b] : a < b; });
    const int s = static_cast<int>(nb.size());

    ++stats_.branch_events;
    int children = 0;
    auto child = [&](int budget) {
      ++children;
      ++stats_.child_total;
      stats_.max_fanout = std::max(stats_.max_fanout, children);
      return node(budget, depth + 1);
    };

    if (cand_.test(pivot)) {
      const int b = std::min(d_ + 1 - outside, s);
      std::size_t m = log_.size();
      remove(pivot);
      if (child(t - 1)) return true;
      undo(m);
      if (b >= 1) {
        exclude(pivot);
        for (int i = 2; i <= b; ++i) {
          m = log_.size();
          remove(nb[i - 2]);
          if (child(t - 1)) return true;
          undo(m);
          exclude(nb[i - 2]);
        }
        m = log_.size();
        for (int j = b - 1; j < s; ++j) remove(nb[j]);
        if (child(t - (s - b + 1))) return true;
        undo(m);
      }
    } else {
      const int b = std::min(d_ - outside, s);
      for (int i = 1; i <= b; ++i) {
        const std::size_t m = log_.size();
        remove(nb[i - 1]);
        if (child(t - 1)) return true;
        undo(m);
        exclude(nb[i - 1]);
      }
      const std::size_t m = log_.size();
      for (int j = std::max(b, 0); j < s; ++j) remove(nb[j]);
      if (child(t - (s - std::max(b, 0)))) return true;
      undo(m);
    }
    return fail();
  }

  const DenseGraph& g_;
  const int d_;
  const DbddOptions& opts_;
  SearchStats& stats_;
  Bitset alive_;
  Bitset cand_;
  Bitset high_;
  Bitset outside_;
  std::vector<int> deg_;
  std::vector<int> caps_;
  std::vector<Vertex> deleted_;
  std::vector<Op> log_;
  PartitionScratch scratch_;
};

}  // namespace

std::optional<std::vector<Vertex>> dbdd_solve(const DbddInstance& inst, const DbddOptions& opts, SearchStats& stats) {
  if (inst.candidates.size() != inst.graph.num_vertices())
    throw std::invalid_argument("candidate set size does not match the graph");
  DbddSearch search(inst, opts, stats);
  return search.run(inst.budget);
}

long partition_bound(const DenseGraph& g, int max_degree, const Bitset& alive, const Bitset& candidates,
                     bool clamp_terms) {
  PartitionScratch scratch;
  return partition_bound_impl(g, max_degree, alive.words(), candidates.words(), clamp_terms, scratch);
}

long partition_bound(const DenseGraph& g, int max_degree, const Bitset& candidates, bool clamp_terms) {
  return partition_bound(g, max_degree, Bitset::full(g.num_vertices()), candidates, clamp_terms);
}

long partition_bound(const Graph& g, int max_degree, const VertexSet& candidates, bool clamp_terms) {
  Bitset c(g.num_vertices());
  for (Vertex v : candidates) {
    if (v >= g.num_vertices()) throw GraphError("candidate out of range");
    c.set(v);
  }
  return partition_bound(g.to_dense(), max_degree, c, clamp_terms);
}

bool maybe_prune(const DbddInstance& inst, bool clamp_terms) {
  return partition_bound(inst.graph, inst.max_degree, inst.candidates, clamp_terms) > inst.budget;
}

}  // namespace kplexer
