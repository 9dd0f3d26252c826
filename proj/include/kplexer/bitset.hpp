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

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace kplexer {

using Word = std::uint64_t;

constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

// Word-span helpers shared by Bitset and DenseGraph rows.
namespace bits {

inline bool test(std::span<const Word> w, std::size_t i) { return (w[i / kWordBits] >> (i % kWordBits)) & 1U; }
inline void set(std::span<Word> w, std::size_t i) { w[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> w, std::size_t i) { w[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline std::size_t count(std::span<const Word> w) {
  std::size_t c = 0;
  for (Word x : w) c += static_cast<std::size_t>(std::popcount(x));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b, std::span<const Word> c) {
  std::size_t r = 0;
  for (std::size_t i = 0; i < a.size(); ++i) r += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
  return r;
}

inline std::size_t count_and_not(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return c;
}

inline bool any(std::span<const Word> w) {
  for (Word x : w)
    if (x != 0) return true;
  return false;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

// Calls f(index) for every set bit, in increasing order.
template <typename F>
void for_each(std::span<const Word> w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    Word x = w[i];
    while (x != 0) {
      const auto b = static_cast<std::size_t>(std::countr_zero(x));
      f(i * kWordBits + b);
      x &= x - 1;
    }
  }
}

}  // namespace bits

/// Fixed-capacity bitset sized at runtime. Used for subproblem-sized vertex sets.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : size_(n), words_(words_for(n), 0) {}

  static Bitset full(std::size_t n) {
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i) b.set(i);
    return b;
  }

  std::size_t size() const { return size_; }
  std::size_t num_words() const { return words_.size(); }

  bool test(std::size_t i) const {
    assert(i < size_);
    return bits::test(words_, i);
  }
  void set(std::size_t i) {
    assert(i < size_);
    bits::set(words_, i);
  }
  void reset(std::size_t i) {
    assert(i < size_);
    bits::reset(words_, i);
  }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const { return bits::count(words_); }
  bool any() const { return bits::any(words_); }
  bool none() const { return !any(); }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend bool operator==(const Bitset& a, const Bitset& b) = default;

  template <typename F>
  void for_each(F&& f) const {
    bits::for_each(words_, std::forward<F>(f));
  }

  std::vector<std::uint32_t> to_vector() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

/// Adjacency-matrix graph for subproblems. Rows are bitsets; the matrix is kept symmetric
/// and loop-free by every mutator.
class DenseGraph {
 public:
  DenseGraph() = default;
  explicit DenseGraph(std::size_t n) : n_(n), stride_(words_for(n)), rows_(n * words_for(n), 0) {}

  std::size_t num_vertices() const { return n_; }
  std::size_t stride() const { return stride_; }

  std::span<const Word> row(std::size_t u) const { return {rows_.data() + u * stride_, stride_}; }
  std::span<Word> row(std::size_t u) { return {rows_.data() + u * stride_, stride_}; }

  bool adjacent(std::size_t u, std::size_t v) const { return bits::test(row(u), v); }
  void add_edge(std::size_t u, std::size_t v) {
    assert(u != v);
    bits::set(row(u), v);
    bits::set(row(v), u);
  }
  void remove_edge(std::size_t u, std::size_t v) {
    bits::reset(row(u), v);
    bits::reset(row(v), u);
  }
  // Drops every edge incident to u; u stays as an isolated vertex.
  void isolate(std::size_t u) {
    bits::for_each(row(u), [&](std::size_t v) { bits::reset(row(v), u); });
    for (Word& w : row(u)) w = 0;
  }

  std::size_t degree(std::size_t u) const { return bits::count(row(u)); }
  std::size_t num_edges() const {
    std::size_t twice = 0;
    for (std::size_t u = 0; u < n_; ++u) twice += degree(u);
    return twice / 2;
  }

  /// Complement restricted to the vertices in `keep`, compacted to 0..|keep|-1 in
  /// increasing index order.
  DenseGraph complement_of(const Bitset& keep) const;
  /// Subgraph induced by `keep`, compacted like complement_of.
  DenseGraph induced(const Bitset& keep) const;
  DenseGraph complement() const { return complement_of(Bitset::full(n_)); }

  friend bool operator==(const DenseGraph& a, const DenseGraph& b) = default;

 private:
  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> rows_;
};

}  // namespace kplexer
