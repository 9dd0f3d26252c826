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
#include <cstdint>

#include "kplexer/graph.hpp"

namespace kplexer {

struct LocalSearchOptions {
  /// Move budget; 0 picks one from the size of the search graph.
  std::uint64_t max_iterations = 0;
  std::uint64_t seed = 0x6b706c6578ULL;
  /// Skip the search when the core that could hold a larger k-plex is bigger than this.
  std::size_t max_core = 4096;
};

/// Tries to grow the k-plex `start` with add moves and perturbations that force one outside
/// vertex in and repair by removals. Works on the core that can host a k-plex larger than
/// `start`. Returns `start` when nothing better is found. Deterministic for fixed options.
VertexSet local_search_kplex(const Graph& g, int k, const VertexSet& start, const LocalSearchOptions& opts = {});

}  // namespace kplexer
