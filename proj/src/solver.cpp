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
#include "kplexer/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "kplexer/heuristic.hpp"
#include "kplexer/oracle.hpp"
#include "kplexer/reduce.hpp"

namespace kplexer {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::vertex:
      return "vertex";
    case Strategy::edge:
      return "edge";
    case Strategy::hybrid:
      return "hybrid";
  }
  return "?";
}

std::optional<Strategy> parse_strategy(std::string_view s) {
  if (s == "vertex") return Strategy::vertex;
  if (s == "edge") return Strategy::edge;
  if (s == "hybrid") return Strategy::hybrid;
  return std::nullopt;
}

std::string_view to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal:
      return "optimal";
    case SolveStatus::trivial:
      return "trivial";
    case SolveStatus::timeout:
      return "timeout";
  }
  return "?";
}

AnchorSubsets::AnchorSubsets(VertexSet base, std::size_t limit) : base_(std::move(base)), limit_(limit) {}

bool AnchorSubsets::next(VertexSet& out) {
  if (done_) return false;
  if (!started_) {
    started_ = true;
  } else {
    // Advance to the next combination of the current size, or to the first of the next size.
    const std::size_t n = base_.size();
    std::size_t i = size_;
    while (i > 0 && idx_[i - 1] == n - size_ + i - 1) --i;
    if (i == 0) {
      ++size_;
      if (size_ > limit_ || size_ > n) {
        done_ = true;
        return false;
      }
      idx_.resize(size_);
      for (std::size_t j = 0; j < size_; ++j) idx_[j] = j;
    } else {
      ++idx_[i - 1];
      for (std::size_t j = i; j < size_; ++j) idx_[j] = idx_[j - 1] + 1;
    }
  }
  out.clear();
  for (std::size_t j : idx_) out.push_back(base_[j]);
  return true;
}

std::vector<VertexSet> enumerate_anchor_subsets(const VertexSet& base, std::size_t limit) {
  std::vector<VertexSet> out;
  AnchorSubsets it(base, limit);
  VertexSet s;
  while (it.next(s)) out.push_back(s);
  return out;
}

AnchorKind choose_anchor_hybrid(std::size_t forward_vertex, std::size_t forward_edge, int k) {
  return forward_vertex + static_cast<std::size_t>(k) <= forward_edge + 2 * static_cast<std::size_t>(k)
             ? AnchorKind::vertex
             : AnchorKind::edge;
}

namespace {

/// One seed (vertex or edge) with its forward sets.
struct AnchorJob {
  std::vector<Vertex> seeds;
  VertexSet forward;
  VertexSet two_hop;
  std::size_t max_extra = 0;
};

class Engine {
 public:
  Engine(const Graph& g, int k, const SolverConfig& cfg, const Deadline& deadline, SearchStats& stats)
      : g_(g), k_(k), cfg_(cfg), deadline_(deadline), stats_(stats) {}

  std::uint64_t subproblems() const { return subproblems_; }

  /// Every S ⊆ two_hop with |S| <= max_extra, as in the plain decision procedures.
  std::optional<VertexSet> run_literal(const AnchorJob& job, int p) {
    const Universe u = make_universe(job);
    VertexSet pool;
    for (std::size_t i = u.pool_begin; i < u.local.size(); ++i) pool.push_back(static_cast<Vertex>(i));
    AnchorSubsets subsets(pool, job.max_extra);
    VertexSet s;
    while (subsets.next(s)) {
      std::vector<std::size_t> extra(s.begin(), s.end());
      if (auto w = solve_local(u.graph, u.local, job.seeds.size(), extra, u.forward_mask, p)) return w;
    }
    return std::nullopt;
  }

  /// Depth-first walk over S that skips anchors failing a necessary condition: the anchor
  /// must be a k-plex and, with reductions on, pass the pair and higher-order tests in the
  /// universe G[seeds ∪ N⁺ ∪ N²⁺].
  std::optional<VertexSet> run_pruned(const AnchorJob& job, int p) {
    Universe u = make_universe(job);
    const std::size_t ns = job.seeds.size();
    Bitset alive = Bitset::full(u.local.size());
    if (!filter_universe(u, alive, ns, p)) return std::nullopt;

    std::size_t forward_alive = 0;
    for (std::size_t i = ns; i < u.pool_begin; ++i) {
      if (alive.test(i)) {
        ++forward_alive;
      } else {
        u.forward_mask.reset(i);
      }
    }
    std::vector<std::size_t> pool;
    for (std::size_t i = u.pool_begin; i < u.local.size(); ++i)
      if (alive.test(i)) pool.push_back(i);

    const long need = static_cast<long>(p) - static_cast<long>(ns + forward_alive);
    const std::size_t min_extra = static_cast<std::size_t>(std::max<long>(need, 0));
    if (min_extra > job.max_extra || min_extra > pool.size()) return std::nullopt;

    Walk w{u,  alive, pool, job.max_extra, min_extra, p, {}, std::vector<int>(u.local.size(), 0), {}, 0,
           std::vector<Word>(alive.words().begin(), alive.words().end())};
    for (std::size_t s = 0; s < ns; ++s) {
      w.miss[s] = 1;
      for (std::size_t t = 0; t < ns; ++t)
        if (t != s && !u.graph.adjacent(s, t)) ++w.miss[s];
      const auto row = u.graph.row(s);
      for (std::size_t i = 0; i < w.common.size(); ++i) w.common[i] &= row[i];
      for (std::size_t t = 0; t < ns; ++t) w.twice_lambda += u.graph.adjacent(s, t) ? 1 : 0;
      w.members.push_back(s);
    }
    return walk(w, 0);
  }

  /// One DBDD search per seed: the distance-two vertices are candidates like the forward
  /// ones, and the seeds' own non-neighbor limit caps how many of them survive.
  std::optional<VertexSet> run_merged(const AnchorJob& job, int p) {
    deadline_.check();
    ++subproblems_;
    Universe u = make_universe(job);
    const std::size_t n = u.local.size();
    if (n < static_cast<std::size_t>(p)) return std::nullopt;
    Bitset anchor(n);
    std::vector<std::size_t> seeds;
    for (std::size_t s = 0; s < job.seeds.size(); ++s) {
      anchor.set(s);
      seeds.push_back(s);
    }
    Bitset cand = Bitset::full(n);
    cand.and_not(anchor);
    return reduce_and_search(u.graph, anchor, cand, seeds, u.local, p);
  }

 private:
  struct Universe {
    DenseGraph graph;
    std::vector<Vertex> local;  // universe id -> input graph id
    std::size_t pool_begin = 0;
    Bitset forward_mask;
  };

  struct Walk {
    Universe& u;
    const Bitset& alive;
    const std::vector<std::size_t>& pool;
    std::size_t max_extra;
    std::size_t min_extra;
    int p;
    std::vector<std::size_t> extra;
    std::vector<int> miss;  // 1 + non-neighbors inside the anchor, for anchor members
    std::vector<std::size_t> members;
    std::size_t twice_lambda;
    std::vector<Word> common;
  };

  Universe make_universe(const AnchorJob& job) const {
    Universe u;
    u.local.reserve(job.seeds.size() + job.forward.size() + job.two_hop.size());
    u.local.insert(u.local.end(), job.seeds.begin(), job.seeds.end());
    u.local.insert(u.local.end(), job.forward.begin(), job.forward.end());
    u.pool_begin = u.local.size();
    u.local.insert(u.local.end(), job.two_hop.begin(), job.two_hop.end());
    u.graph = g_.to_dense(u.local);
    u.forward_mask = Bitset(u.local.size());
    for (std::size_t i = job.seeds.size(); i < u.pool_begin; ++i) u.forward_mask.set(i);
    return u;
  }

  // Vertex rules that hold for every anchor of this seed, applied to the whole universe.
  bool filter_universe(Universe& u, Bitset& alive, std::size_t ns, int p) const {
    const long first = static_cast<long>(p) - k_;
    const long adj_pair = static_cast<long>(p) - 2L * k_;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < ns; ++s)
        if (static_cast<long>(u.graph.degree(s)) < first) return false;
      if (cfg_.reductions_enabled && ns == 2 && u.graph.adjacent(0, 1) &&
          static_cast<long>(bits::count_and(u.graph.row(0), u.graph.row(1))) < adj_pair)
        return false;
      alive.for_each([&](std::size_t x) {
        if (x < ns) return;
        bool drop = static_cast<long>(u.graph.degree(x)) < first;
        if (cfg_.reductions_enabled) {
          for (std::size_t s = 0; s < ns && !drop; ++s) {
            const long threshold = adj_pair + (u.graph.adjacent(s, x) ? 0 : 2);
            drop = static_cast<long>(bits::count_and(u.graph.row(s), u.graph.row(x))) < threshold;
          }
        }
        if (drop) {
          u.graph.isolate(x);
          alive.reset(x);
          changed = true;
        }
      });
    }
    return true;
  }

  std::optional<VertexSet> walk(Walk& w, std::size_t from) {
    if (w.extra.size() >= w.min_extra) {
      if (auto r = solve_local(w.u.graph, w.u.local, w.members.size() - w.extra.size(), w.extra, w.u.forward_mask, w.p))
        return r;
    }
    if (w.extra.size() == w.max_extra) return std::nullopt;
    const DenseGraph& g = w.u.graph;
    for (std::size_t j = from; j < w.pool.size(); ++j) {
      if (w.extra.size() + (w.pool.size() - j) < w.min_extra) break;
      const std::size_t x = w.pool[j];

      // The anchor plus x must itself be a k-plex.
      int own = 1;
      bool ok = true;
      for (std::size_t m : w.members) {
        if (g.adjacent(m, x)) continue;
        if (w.miss[m] + 1 > k_) ok = false;
        ++own;
      }
      if (!ok || own > k_) continue;

      const std::size_t adj_members = [&] {
        std::size_t c = 0;
        for (std::size_t m : w.members) c += g.adjacent(m, x) ? 1 : 0;
        return c;
      }();
      std::vector<Word> common(w.common);
      const auto row = g.row(x);
      for (std::size_t i = 0; i < common.size(); ++i) common[i] &= row[i];
      if (cfg_.reductions_enabled) {
        const long pair_adj = static_cast<long>(w.p) - 2L * k_;
        for (std::size_t s : w.extra) {
          const long threshold = pair_adj + (g.adjacent(s, x) ? 0 : 2);
          if (static_cast<long>(bits::count_and(g.row(s), row)) < threshold) {
            ok = false;
            break;
          }
        }
        if (!ok) continue;
        const long n = static_cast<long>(w.members.size()) + 1;
        const long twice_lambda = static_cast<long>(w.twice_lambda + 2 * adj_members);
        const long threshold = w.p - n * k_ + n * (n - 1) - twice_lambda;
        if (static_cast<long>(bits::count(common)) < threshold) continue;
      }

      for (std::size_t m : w.members)
        if (!g.adjacent(m, x)) ++w.miss[m];
      w.miss[x] = own;
      w.members.push_back(x);
      w.extra.push_back(x);
      w.twice_lambda += 2 * adj_members;
      std::swap(common, w.common);

      auto r = walk(w, j + 1);

      std::swap(common, w.common);
      w.twice_lambda -= 2 * adj_members;
      w.extra.pop_back();
      w.members.pop_back();
      w.miss[x] = 0;
      for (std::size_t m : w.members)
        if (!g.adjacent(m, x)) --w.miss[m];
      if (r) return r;
    }
    return std::nullopt;
  }

  /// G_s = universe[seeds ∪ extra ∪ forward], reduced, then DBDD on its complement.
  std::optional<VertexSet> solve_local(const DenseGraph& universe, const std::vector<Vertex>& local,
                                       std::size_t num_seeds, const std::vector<std::size_t>& extra,
                                       const Bitset& forward_mask, int p) {
    deadline_.check();
    ++subproblems_;
    Bitset keep = forward_mask;
    for (std::size_t s = 0; s < num_seeds; ++s) keep.set(s);
    for (std::size_t x : extra) keep.set(x);
    if (keep.count() < static_cast<std::size_t>(p)) return std::nullopt;

    const std::vector<std::uint32_t> members = keep.to_vector();
    DenseGraph gs = universe.induced(keep);
    const std::size_t n = members.size();
    Bitset anchor(n);
    Bitset cand(n);
    std::vector<std::size_t> seeds;
    std::vector<Vertex> to_parent(n);
    for (std::size_t i = 0; i < n; ++i) {
      to_parent[i] = local[members[i]];
      if (members[i] < num_seeds) seeds.push_back(i);
      if (forward_mask.test(members[i])) {
        cand.set(i);
      } else {
        anchor.set(i);
      }
    }
    return reduce_and_search(gs, anchor, cand, seeds, to_parent, p);
  }

  /// Reduce, then look for a deletion set of at most |alive| - p candidates in the
  /// complement that leaves every vertex with at most k - 1 non-neighbors.
  std::optional<VertexSet> reduce_and_search(DenseGraph& gs, const Bitset& anchor, const Bitset& cand,
                                             const std::vector<std::size_t>& seeds,
                                             const std::vector<Vertex>& to_parent, int p) {
    const std::size_t n = gs.num_vertices();
    Bitset alive = Bitset::full(n);
    if (!reduce_in_place(gs, alive, anchor, seeds, k_, p, ReduceOptions{cfg_.reductions_enabled}))
      return std::nullopt;
    const int t = static_cast<int>(alive.count()) - p;
    if (t < 0) return std::nullopt;

    const std::vector<std::uint32_t> kept = alive.to_vector();
    DbddInstance inst;
    inst.graph = gs.complement_of(alive);
    inst.max_degree = k_ - 1;
    inst.budget = t;
    inst.candidates = Bitset(kept.size());
    for (std::size_t j = 0; j < kept.size(); ++j) {
      if (cand.test(kept[j])) {
        inst.candidates.set(j);
      } else if (static_cast<int>(inst.graph.degree(j)) > inst.max_degree + t) {
        return std::nullopt;  // an anchor vertex would need more than t deletions around it
      }
    }
    DbddOptions opts;
    opts.bound_enabled = cfg_.dbdd_bound_enabled;
    opts.clamp_partition_terms = cfg_.clamp_partition_terms;
    opts.deadline = &deadline_;
    const auto deleted = dbdd_solve(inst, opts, stats_);
    if (!deleted) return std::nullopt;
    Bitset gone(kept.size());
    for (Vertex x : *deleted) gone.set(x);
    VertexSet out;
    for (std::size_t j = 0; j < kept.size(); ++j)
      if (!gone.test(j)) out.push_back(to_parent[kept[j]]);
    std::sort(out.begin(), out.end());
    return out;
  }

  const Graph& g_;
  int k_;
  const SolverConfig& cfg_;
  const Deadline& deadline_;
  SearchStats& stats_;
  std::uint64_t subproblems_ = 0;
};

void check_arguments(int k, int p) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (p < 2 * k - 1) throw std::invalid_argument("p must be at least 2k-1");
}

/// Forward-degree table of a vertex ordering.
std::vector<std::size_t> forward_degrees(const Graph& g, const VertexOrdering& ord) {
  std::vector<std::size_t> out(g.num_vertices(), 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    for (Vertex w : g.neighbors(v)) out[v] += ord.later(w, v) ? 1 : 0;
  return out;
}

AnchorJob vertex_job(const Graph& g, const VertexOrdering& ord, Vertex v, int k) {
  return {{v}, forward_neighbors(ord, g, v), forward_two_hop(ord, g, v), static_cast<std::size_t>(k - 1)};
}

AnchorJob edge_job(const EdgeOrdering& ord, const EdgeSuffixIndex& index, std::size_t i, int k) {
  ForwardEdgeSets sets = index.sets(i);
  const Edge e = ord.order[i];
  return {{e.u, e.v}, std::move(sets.common), std::move(sets.two_hop), static_cast<std::size_t>(2 * k - 2)};
}

/// Every later non-neighbor of v goes to the pool, which covers k-plexes of any size.
AnchorJob wide_vertex_job(const Graph& g, const VertexOrdering& ord, Vertex v) {
  AnchorJob job{{v}, forward_neighbors(ord, g, v), {}, 0};
  for (std::size_t i = ord.position[v] + 1; i < ord.order.size(); ++i) {
    const Vertex w = ord.order[i];
    if (!g.adjacent(v, w)) job.two_hop.push_back(w);
  }
  std::sort(job.two_hop.begin(), job.two_hop.end());
  job.max_extra = job.two_hop.size();
  return job;
}

/// How each seed's subproblem is searched. `literal` and `enumerate` try every S
/// separately (the latter skipping hopeless ones); `merged` lets DBDD choose S; `wide`
/// is `merged` over wide vertex jobs.
enum class Mode { literal, enumerate, merged, wide };

/// The descent loop shared by every strategy.
class Descent {
 public:
  Descent(const Graph& g, int k, const SolverConfig& cfg, const Deadline& deadline, SearchStats& stats)
      : g_(g), k_(k), cfg_(cfg), engine_(g, k, cfg, deadline, stats) {}

  void use_vertices(const VertexOrdering& ord) {
    vord_ = &ord;
    fdeg_ = forward_degrees(g_, ord);
  }
  void use_edges(const EdgeOrdering& ord) {
    eord_ = &ord;
    index_.emplace(ord, g_);
    fcommon_.resize(ord.order.size());
    for (std::size_t i = 0; i < ord.order.size(); ++i) fcommon_[i] = index_->forward_common_count(i);
  }

  std::uint64_t subproblems() const { return engine_.subproblems(); }

  std::optional<VertexSet> decide(int p, Strategy strategy, Mode mode) {
    const auto pk = static_cast<std::size_t>(k_);
    auto vertex_ok = [&](std::size_t i) { return fdeg_[vord_->order[i]] + pk >= static_cast<std::size_t>(p); };
    auto edge_ok = [&](std::size_t i) { return fcommon_[i] + 2 * pk >= static_cast<std::size_t>(p); };
    auto run_vertex = [&](std::size_t i) -> std::optional<VertexSet> {
      const Vertex v = vord_->order[i];
      auto& jobs = mode == Mode::wide ? wjobs_ : vjobs_;
      auto it = jobs.find(v);
      if (it == jobs.end())
        it = jobs.emplace(v, mode == Mode::wide ? wide_vertex_job(g_, *vord_, v) : vertex_job(g_, *vord_, v, k_)).first;
      return run(it->second, p, mode);
    };
    auto run_edge = [&](std::size_t i) -> std::optional<VertexSet> {
      auto it = ejobs_.find(i);
      if (it == ejobs_.end()) it = ejobs_.emplace(i, edge_job(*eord_, *index_, i, k_)).first;
      return run(it->second, p, mode);
    };

    // A single vertex is a 1-plex without any edge to anchor it.
    if (p <= 1) return g_.num_vertices() == 0 ? std::nullopt : std::optional<VertexSet>(VertexSet{0});

    const std::size_t n = g_.num_vertices();
    const std::size_t m = eord_ ? eord_->order.size() : 0;
    if (strategy == Strategy::vertex || mode == Mode::wide) {
      for (std::size_t i = 0; i < n; ++i)
        if (vertex_ok(i))
          if (auto r = run_vertex(i)) return r;
      return std::nullopt;
    }
    if (strategy == Strategy::edge) {
      for (std::size_t i = 0; i < m; ++i)
        if (edge_ok(i))
          if (auto r = run_edge(i)) return r;
      return std::nullopt;
    }
    // Hybrid: both queues advance in their own order, the rule only picks which front goes
    // next. Exhausting either queue covers every k-plex of size p.
    std::size_t vi = 0;
    std::size_t ei = 0;
    for (;;) {
      while (vi < n && !vertex_ok(vi)) ++vi;
      while (ei < m && !edge_ok(ei)) ++ei;
      if (vi == n || ei == m) return std::nullopt;
      if (choose_anchor_hybrid(fdeg_[vord_->order[vi]], fcommon_[ei], k_) == AnchorKind::vertex) {
        if (auto r = run_vertex(vi)) return r;
        ++vi;
      } else {
        if (auto r = run_edge(ei)) return r;
        ++ei;
      }
    }
  }

 private:
  std::optional<VertexSet> run(const AnchorJob& job, int p, Mode mode) {
    switch (mode) {
      case Mode::literal:
        return engine_.run_literal(job, p);
      case Mode::enumerate:
        return engine_.run_pruned(job, p);
      case Mode::merged:
      case Mode::wide:
        return engine_.run_merged(job, p);
    }
    return std::nullopt;
  }

  const Graph& g_;
  int k_;
  const SolverConfig& cfg_;
  Engine engine_;
  const VertexOrdering* vord_ = nullptr;
  const EdgeOrdering* eord_ = nullptr;
  std::optional<EdgeSuffixIndex> index_;
  std::vector<std::size_t> fdeg_;
  std::vector<std::size_t> fcommon_;
  std::unordered_map<Vertex, AnchorJob> vjobs_;
  std::unordered_map<Vertex, AnchorJob> wjobs_;
  std::unordered_map<std::size_t, AnchorJob> ejobs_;
};

void verify_witness(const Graph& g, const VertexSet& w, int k, int p) {
  if (static_cast<long>(w.size()) < p || !is_kplex(g, w, k)) throw std::logic_error("solver produced an invalid witness");
}

}  // namespace

std::optional<VertexSet> kplex_decide(const Graph& g, int k, int p, const SolverConfig& cfg, SearchStats* stats) {
  check_arguments(k, p);
  SearchStats local;
  const Deadline deadline;
  const VertexOrdering ord = degeneracy_ordering(g);
  Descent d(g, k, cfg, deadline, stats ? *stats : local);
  d.use_vertices(ord);
  auto r = d.decide(p, Strategy::vertex, Mode::literal);
  if (r) verify_witness(g, *r, k, p);
  return r;
}

std::optional<VertexSet> kplex_com_decide(const Graph& g, int k, int p, const SolverConfig& cfg, SearchStats* stats) {
  check_arguments(k, p);
  SearchStats local;
  const Deadline deadline;
  const EdgeOrdering ord = community_degeneracy_ordering(g);
  Descent d(g, k, cfg, deadline, stats ? *stats : local);
  d.use_edges(ord);
  auto r = d.decide(p, Strategy::edge, Mode::literal);
  if (r) verify_witness(g, *r, k, p);
  return r;
}

SolveResult maple_solve(const Graph& g, int k, const SolverConfig& cfg) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (!(cfg.time_limit.count() > 0)) throw std::invalid_argument("time limit must be positive");
  const auto start = std::chrono::steady_clock::now();
  const Deadline deadline(cfg.time_limit);

  SolveResult res;
  const VertexOrdering vord = degeneracy_ordering(g);
  res.d = vord.degeneracy;
  std::optional<EdgeOrdering> eord;
  if (cfg.strategy != Strategy::vertex || cfg.compute_cd) {
    eord = community_degeneracy_ordering(g);
    res.cd = eord->community_degeneracy;
  }

  VertexSet greedy = greedy_lower_bound(g, vord, k);
  if (cfg.local_search) greedy = local_search_kplex(g, k, greedy);
  res.lower_bound = greedy.size();
  const std::size_t floor_size = static_cast<std::size_t>(2 * k - 2);
  std::optional<VertexSet> best;
  std::size_t l = floor_size;
  if (greedy.size() > floor_size) {
    best = greedy;
    l = greedy.size();
  }

  const std::size_t n = g.num_vertices();
  const std::size_t pk = static_cast<std::size_t>(k);
  std::size_t hi = res.d + pk;
  if (cfg.strategy == Strategy::edge) hi = *res.cd + 2 * pk;
  if (cfg.strategy == Strategy::hybrid) hi = std::min(hi, *res.cd + 2 * pk);
  hi = std::min(hi, n);

  Descent descent(g, k, cfg, deadline, res.stats);
  descent.use_vertices(vord);
  if (cfg.strategy != Strategy::vertex) descent.use_edges(*eord);

  const Mode mode = cfg.enumerate_anchors ? Mode::enumerate : Mode::merged;
  std::optional<VertexSet> small;
  bool timed_out = false;
  try {
    for (std::size_t p = hi; p > l; --p) {
      if (auto w = descent.decide(static_cast<int>(p), cfg.strategy, mode)) {
        verify_witness(g, *w, k, static_cast<int>(p));
        best = std::move(w);
        break;
      }
    }
    // Below 2k - 1 the distance-two decomposition is no longer complete, so the remaining
    // sizes are settled with wide vertex jobs.
    if (!best) {
      const std::size_t top = std::min({floor_size, res.d + pk, n});
      for (std::size_t p = top; p > greedy.size(); --p) {
        if (auto w = descent.decide(static_cast<int>(p), Strategy::vertex, Mode::wide)) {
          verify_witness(g, *w, k, static_cast<int>(p));
          small = std::move(w);
          break;
        }
      }
    }
  } catch (const SearchTimeout&) {
    timed_out = true;
  }

  if (timed_out) {
    res.status = SolveStatus::timeout;
    res.witness = best ? *best : small ? *small : greedy;
    res.omega_k = res.witness.size();
  } else if (best) {
    res.status = SolveStatus::optimal;
    res.witness = *best;
    res.omega_k = best->size();
    res.omega_exact = true;
  } else {
    // No k-plex of size 2k-1 or more exists.
    res.status = SolveStatus::trivial;
    res.witness = small ? *small : greedy;
    res.omega_k = res.witness.size();
    res.omega_exact = true;
  }
  if (res.omega_exact) {
    res.g_k = static_cast<long>(res.d) + k - static_cast<long>(res.omega_k);
    if (res.cd) res.cg_k = static_cast<long>(*res.cd) + 2L * k - static_cast<long>(res.omega_k);
  }
  res.subproblems = descent.subproblems();
  res.gamma = res.stats.branching_factor();
  if (!cfg.collect_stats) res.stats = SearchStats{};
  res.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace kplexer
