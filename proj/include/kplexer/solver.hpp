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

#include <chrono>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "kplexer/dbdd.hpp"
#include "kplexer/graph.hpp"
#include "kplexer/ordering.hpp"

namespace kplexer {

enum class Strategy { vertex, edge, hybrid };

std::string_view to_string(Strategy s);
std::optional<Strategy> parse_strategy(std::string_view s);

struct SolverConfig {
  Strategy strategy = Strategy::vertex;
  /// Second-order and higher-order reductions. Off leaves only the first-order vertex rule.
  bool reductions_enabled = true;
  /// Partition and excess bounds inside DBDD. Off disables bound pruning entirely.
  bool dbdd_bound_enabled = true;
  bool clamp_partition_terms = false;
  std::chrono::duration<double> time_limit{1800.0};
  bool collect_stats = true;
  /// Compute cd(G) for reporting even when the strategy does not need it.
  bool compute_cd = true;
  /// Improve the greedy lower bound with a local search before the descent.
  bool local_search = true;
  /// Try each S around a seed as its own subproblem instead of leaving the choice to DBDD.
  bool enumerate_anchors = false;
};

enum class SolveStatus { optimal, trivial, timeout };

std::string_view to_string(SolveStatus s);

struct SolveResult {
  SolveStatus status = SolveStatus::trivial;
  /// Optimum unless timed out, in which case the best size found. Trivial means the
  /// optimum is below 2k - 1.
  std::size_t omega_k = 0;
  bool omega_exact = false;
  VertexSet witness;
  std::size_t d = 0;
  std::optional<std::size_t> cd;
  std::optional<long> g_k;
  std::optional<long> cg_k;
  /// Size of the initial k-plex (greedy, then local search when enabled).
  std::size_t lower_bound = 0;
  std::uint64_t subproblems = 0;
  double elapsed_seconds = 0.0;
  SearchStats stats;
  double gamma = 1.0;
};

/// Subsets of `base` with at most `limit` members, each exactly once, by non-decreasing size
/// and lexicographically within a size. The empty set comes first.
class AnchorSubsets {
 public:
  AnchorSubsets(VertexSet base, std::size_t limit);
  /// Writes the next subset to `out`; false once every subset has been produced.
  bool next(VertexSet& out);

 private:
  VertexSet base_;
  std::size_t limit_;
  std::size_t size_ = 0;
  std::vector<std::size_t> idx_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<VertexSet> enumerate_anchor_subsets(const VertexSet& base, std::size_t limit);

enum class AnchorKind { vertex, edge };

/// Vertex when |N⁺(v)| + k <= |N⁺(e)| + 2k, otherwise edge.
AnchorKind choose_anchor_hybrid(std::size_t forward_vertex, std::size_t forward_edge, int k);

/// A k-plex of size at least p, or nothing. Requires k >= 1 and p >= 2k - 1. Enumerates every
/// S ⊆ N²⁺(v_i) with |S| <= k - 1 around each vertex in degeneracy order.
std::optional<VertexSet> kplex_decide(const Graph& g, int k, int p, const SolverConfig& cfg = {},
                                      SearchStats* stats = nullptr);

/// Same contract as kplex_decide, anchored at edges in community-degeneracy order with
/// |S| <= 2k - 2.
std::optional<VertexSet> kplex_com_decide(const Graph& g, int k, int p, const SolverConfig& cfg = {},
                                          SearchStats* stats = nullptr);

/// Maximum k-plex by descending p from the degeneracy bound.
SolveResult maple_solve(const Graph& g, int k, const SolverConfig& cfg = {});

}  // namespace kplexer
