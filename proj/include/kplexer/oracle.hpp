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
#include <optional>
#include <stdexcept>
#include <utility>

#include "kplexer/graph.hpp"

namespace kplexer {

/// Exhaustive reference implementations. They are exponential and meant for tests.
struct OracleLimit {
  static constexpr std::size_t kHardCap = 24;
  std::size_t max_vertices = 20;
};

class OracleRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every member of `members` has at least |members| - k neighbors inside it.
bool is_kplex(const Graph& g, const VertexSet& members, int k);

struct OracleKplex {
  std::size_t size = 0;
  VertexSet members;
};

/// Maximum k-plex containing `anchor` (if given). Among maximum sets the lexicographically
/// smallest sorted member list is returned. (0, ∅) when the anchor is not a k-plex.
OracleKplex brute_force_max_kplex(const Graph& g, int k, const std::optional<VertexSet>& anchor = std::nullopt,
                                  OracleLimit limit = {});

/// Size of a smallest D ⊆ candidates such that g - D has maximum degree <= max_degree.
std::optional<std::size_t> brute_force_min_dbdd(const Graph& g, int max_degree, const VertexSet& candidates,
                                                OracleLimit limit = {});

}  // namespace kplexer
