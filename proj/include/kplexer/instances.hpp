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
#include <string>
#include <string_view>
#include <vector>

#include "kplexer/graph.hpp"

namespace kplexer::instances {

/// Binary words of length `bits`, adjacent when their Hamming distance is at least `distance`.
Graph hamming(int bits, int distance);

/// `size`-subsets of an `elements`-set, adjacent when they share at most `overlap` elements.
Graph johnson(int elements, int size, int overlap);

/// n vertices in floor(n / (c ln n)) near-equal clique clusters arranged on a ring; each
/// cluster is also joined completely to its two ring neighbors.
Graph c_fat(int n, double c);

/// Clique formulation of the set covering problem of the Steiner triple system formed by the
/// lines of AG(3,3): three vertices per triple plus one per point, 378 vertices in total.
Graph mann_a27();

/// Names accepted by `by_name`: hamming6-4, johnson8-4-4, c-fat500-2, MANN_a27.
std::vector<std::string> known_names();
std::optional<Graph> by_name(std::string_view name);

}  // namespace kplexer::instances
