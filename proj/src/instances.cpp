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
#include "kplexer/instances.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace kplexer::instances {

Graph hamming(int bits, int distance) {
  if (bits < 1 || bits > 20) throw std::invalid_argument("hamming: bits out of range");
  const auto n = static_cast<Vertex>(1U << bits);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (std::popcount(a ^ b) >= distance) edges.push_back({a, b});
  return Graph::from_edges(n, edges);
}

Graph johnson(int elements, int size, int overlap) {
  if (elements < 1 || elements > 30 || size < 0 || size > elements)
    throw std::invalid_argument("johnson: parameters out of range");
  std::vector<std::uint32_t> sets;
  for (std::uint32_t mask = 0; mask < (1U << elements); ++mask)
    if (std::popcount(mask) == size) sets.push_back(mask);
  // Lexicographic order of the sorted element lists.
  std::sort(sets.begin(), sets.end(), [](std::uint32_t a, std::uint32_t b) {
    while (a != 0 && b != 0) {
      const int x = std::countr_zero(a);
      const int y = std::countr_zero(b);
      if (x != y) return x < y;
      a &= a - 1;
      b &= b - 1;
    }
    return a == 0 && b != 0;
  });
  std::vector<Edge> edges;
  for (Vertex i = 0; i < sets.size(); ++i)
    for (Vertex j = i + 1; j < sets.size(); ++j)
      if (std::popcount(sets[i] & sets[j]) <= overlap) edges.push_back({i, j});
  return Graph::from_edges(sets.size(), edges);
}

Graph c_fat(int n, double c) {
  if (n < 2 || !(c > 0)) throw std::invalid_argument("c_fat: parameters out of range");
  const int clusters = static_cast<int>(std::floor(n / (c * std::log(n))));
  if (clusters < 3) throw std::invalid_argument("c_fat: fewer than three clusters");
  // The first n mod clusters clusters take one extra vertex.
  std::vector<int> begin(clusters + 1, 0);
  for (int i = 0; i < clusters; ++i) begin[i + 1] = begin[i] + n / clusters + (i < n % clusters ? 1 : 0);
  std::vector<Edge> edges;
  for (int i = 0; i < clusters; ++i) {
    const int j = (i + 1) % clusters;
    for (int a = begin[i]; a < begin[i + 1]; ++a) {
      for (int b = a + 1; b < begin[i + 1]; ++b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
      for (int b = begin[j]; b < begin[j + 1]; ++b) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    }
  }
  return Graph::from_edges(static_cast<std::size_t>(n), edges);
}

Graph mann_a27() {
  // Points of F_3^3 are 0..26 in base 3; a line is three distinct points summing to zero.
  auto digits = [](int x) { return std::array<int, 3>{x % 3, (x / 3) % 3, x / 9}; };
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < 27; ++a)
    for (int b = a + 1; b < 27; ++b) {
      const auto da = digits(a);
      const auto db = digits(b);
      int c = 0;
      for (int i = 2; i >= 0; --i) c = c * 3 + (6 - da[i] - db[i]) % 3;
      if (c > b) triples.push_back({a, b, c});
    }
  const auto t = static_cast<Vertex>(triples.size());  // 117
  const Vertex n = 3 * t + 27;
  std::vector<std::vector<char>> miss(n, std::vector<char>(n, 0));
  auto forbid = [&](Vertex x, Vertex y) { miss[x][y] = miss[y][x] = 1; };
  for (Vertex i = 0; i < t; ++i) {
    for (Vertex a = 0; a < 3; ++a) {
      for (Vertex b = a + 1; b < 3; ++b) forbid(3 * i + a, 3 * i + b);
      forbid(3 * i + a, 3 * t + static_cast<Vertex>(triples[i][a]));
    }
  }
  std::vector<Edge> edges;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y)
      if (!miss[x][y]) edges.push_back({x, y});
  return Graph::from_edges(n, edges);
}

std::vector<std::string> known_names() { return {"hamming6-4", "johnson8-4-4", "c-fat500-2", "MANN_a27"}; }

std::optional<Graph> by_name(std::string_view name) {
  if (name == "hamming6-4") return hamming(6, 4);
  if (name == "johnson8-4-4") return johnson(8, 4, 2);
  if (name == "c-fat500-2") return c_fat(500, 2.0);
  if (name == "MANN_a27") return mann_a27();
  return std::nullopt;
}

}  // namespace kplexer::instances
