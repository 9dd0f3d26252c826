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
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "kplexer/bitset.hpp"
#include "kplexer/graph.hpp"

namespace kplexer {

/// Bounded-degree-deletion instance: remove at most `budget` vertices of `candidates` from
/// `graph` so that every remaining vertex has degree at most `max_degree`.
struct DbddInstance {
  DenseGraph graph;
  int max_degree = 0;
  int budget = 0;
  Bitset candidates;
  /// Vertices already committed to the deletion set. They are not part of `graph`; the
  /// search only appends to them.
  std::vector<Vertex> growing;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t branch_events = 0;
  std::uint64_t child_total = 0;
  std::uint64_t pruned_by_bound = 0;
  int max_depth = 0;
  /// Largest number of children seen at one branching node.
  int max_fanout = 0;

  /// Average number of children per branching node; 1 when the search never branched.
  double branching_factor() const {
    return branch_events == 0 ? 1.0 : static_cast<double>(child_total) / static_cast<double>(branch_events);
  }
  SearchStats& operator+=(const SearchStats& o);
};

/// Thrown from inside a search when its deadline passes.
class SearchTimeout : public std::runtime_error {
 public:
  SearchTimeout() : std::runtime_error("time limit reached") {}
};

class Deadline {
 public:
  using Clock = std::chrono::steady_clock;

  Deadline() = default;  // never expires
  explicit Deadline(std::chrono::duration<double> limit)
      : at_(Clock::now() + std::chrono::duration_cast<Clock::duration>(limit)), armed_(true) {}

  bool expired() const { return armed_ && Clock::now() >= at_; }
  void check() const {
    if (expired()) throw SearchTimeout();
  }

 private:
  Clock::time_point at_{};
  bool armed_ = false;
};

struct DbddOptions {
  /// Prune with the partition bound and the excess bound.
  bool bound_enabled = true;
  /// Clamp each min(d - δ_i, |π_i|) term of the partition bound at zero.
  bool clamp_partition_terms = false;
  const Deadline* deadline = nullptr;
  /// Deadline polling period in search nodes.
  std::uint64_t check_interval = 1024;
};

/// Returns growing ∪ D for some D ⊆ candidates with |D| <= budget such that graph \ D has
/// maximum degree <= max_degree, or nothing when no such D exists. Ids in D are graph ids.
std::optional<std::vector<Vertex>> dbdd_solve(const DbddInstance& inst, const DbddOptions& opts, SearchStats& stats);

/// Partition lower bound on the number of candidates that must be deleted. Only vertices
/// in `alive` take part; `candidates` must be a subset of `alive`.
long partition_bound(const DenseGraph& g, int max_degree, const Bitset& alive, const Bitset& candidates,
                     bool clamp_terms = false);
long partition_bound(const DenseGraph& g, int max_degree, const Bitset& candidates, bool clamp_terms = false);
long partition_bound(const Graph& g, int max_degree, const VertexSet& candidates, bool clamp_terms = false);

/// True iff the partition bound of the instance exceeds its budget.
bool maybe_prune(const DbddInstance& inst, bool clamp_terms = false);

}  // namespace kplexer
