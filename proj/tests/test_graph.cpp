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
#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

#include "doctest.h"
#include "kplexer/graph.hpp"
#include "support.hpp"

using namespace kplexer;
using kplexer::testing::make_graph;
using kplexer::testing::random_graph;

namespace {

Graph parse(const std::string& text, GraphFormat f = GraphFormat::edge_list) {
  std::istringstream in(text);
  return parse_graph(in, f);
}

VertexSet all_vertices(const Graph& g) {
  VertexSet s(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) s[v] = v;
  return s;
}

}  // namespace

TEST_CASE("edge list parsing") {
  SUBCASE("triangle") {
    const Graph g = parse("1 2\n2 3\n3 1\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 3);
    CHECK(g.label(0) == 1);
    CHECK(g.label(2) == 3);
  }
  SUBCASE("duplicates and loops") {
    const Graph g = parse("1 2\n2 1\n1 1\n");
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
  }
  SUBCASE("comments, blank lines and sparse labels") {
    const Graph g = parse("# header\n% other\n\n10 30\n30 20\n");
    CHECK(g.num_vertices() == 3);
    CHECK(g.labels() == std::vector<Label>{10, 20, 30});
    CHECK(g.adjacent(0, 2));
    CHECK(g.adjacent(1, 2));
    CHECK_FALSE(g.adjacent(0, 1));
  }
  SUBCASE("zero based input keeps ids") {
    const Graph g = parse("0 1\n1 2\n");
    CHECK(g.label(0) == 0);
    CHECK(g.label(2) == 2);
  }
  SUBCASE("malformed line reports its number") {
    try {
      parse("1 2\n3 x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(parse("1\n"), ParseError);
    CHECK_THROWS_AS(parse("1 99999999999999999999999\n"), ParseError);
  }
}

TEST_CASE("dimacs parsing") {
  const Graph g = parse("c comment\np edge 4 3\ne 1 2\ne 2 3\ne 3 4\n", GraphFormat::dimacs);
  CHECK(g.num_vertices() == 4);
  CHECK(g.num_edges() == 3);
  CHECK(g.label(0) == 1);
  CHECK(g.adjacent(2, 3));

  CHECK_THROWS_AS(parse("e 1 2\n", GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse("p edge 2 1\ne 1 3\n", GraphFormat::dimacs), ParseError);
  CHECK_THROWS_AS(parse("p edge 2 1\nq 1 2\n", GraphFormat::dimacs), ParseError);

  SUBCASE("round trip") {
    const Graph r = random_graph(15, 0.4, 7);
    std::stringstream buf;
    write_dimacs(buf, r, "round trip");
    const Graph back = parse_graph(buf, GraphFormat::dimacs);
    CHECK(back.edges() == r.edges());
  }
}

TEST_CASE("format detection") {
  CHECK(detect_format("a/b/hamming6-4.clq") == GraphFormat::dimacs);
  CHECK(detect_format("x.dimacs") == GraphFormat::dimacs);
  CHECK(detect_format("x.txt") == GraphFormat::edge_list);
  CHECK(detect_format("x") == GraphFormat::edge_list);
}

TEST_CASE("hamming6-4 file") {
  const Graph g = read_graph(KPLEXER_DATA_DIR "/dimacs/hamming6-4.clq");
  CHECK(g.num_vertices() == 64);
  CHECK(g.num_edges() == 704);
  CHECK_NOTHROW(g.check_invariants());
}

TEST_CASE("structural invariants on random graphs") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_graph(5 + seed % 20, 0.1 + 0.03 * static_cast<double>(seed), seed);
    CHECK_NOTHROW(g.check_invariants());
    std::size_t twice = 0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const auto nb = g.neighbors(v);
      twice += nb.size();
      CHECK(std::adjacent_find(nb.begin(), nb.end(), std::greater_equal<>()) == nb.end());
      for (Vertex w : nb) {
        CHECK(w != v);
        CHECK(g.adjacent(w, v));
      }
    }
    CHECK(twice == 2 * g.num_edges());
  }
}

TEST_CASE("from_edges normalizes its input") {
  const std::vector<Edge> edges{{2, 1}, {1, 2}, {0, 0}, {0, 2}};
  const Graph g = Graph::from_edges(3, edges);
  CHECK(g.num_edges() == 2);
  CHECK(g.edges() == std::vector<Edge>{{0, 2}, {1, 2}});
  const std::vector<Edge> bad{{0, 5}};
  CHECK_THROWS_AS(Graph::from_edges(3, bad), GraphError);
}

TEST_CASE("induced subgraph") {
  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  const VertexSet two{0, 2};
  const InducedSubgraph e = induced_subgraph(tri, two);
  CHECK(e.graph.num_vertices() == 2);
  CHECK(e.graph.num_edges() == 1);
  CHECK(e.to_parent == std::vector<Vertex>{0, 2});

  CHECK(induced_subgraph(tri, VertexSet{}).graph.num_vertices() == 0);
  CHECK_THROWS_AS(induced_subgraph(tri, VertexSet{0, 3}), GraphError);

  std::mt19937_64 rng(11);
  for (int round = 0; round < 20; ++round) {
    const Graph g = random_graph(10, 0.5, 100 + round);
    VertexSet s = all_vertices(g);
    std::shuffle(s.begin(), s.end(), rng);
    s.resize(5);
    const InducedSubgraph sub = induced_subgraph(g, s);
    std::size_t expected = 0;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        expected += g.adjacent(s[i], s[j]) ? 1 : 0;
        CHECK(sub.graph.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) == g.adjacent(s[i], s[j]));
      }
    CHECK(sub.graph.num_edges() == expected);
    CHECK(sub.to_parent == s);
  }

  const Graph g = random_graph(12, 0.4, 5);
  const InducedSubgraph whole = induced_subgraph(g, all_vertices(g));
  CHECK(whole.graph.edges() == g.edges());
}

TEST_CASE("complement") {
  const Graph k4 = testing::complete_graph(4);
  CHECK(complement(k4).num_edges() == 0);
  CHECK(complement(k4).num_vertices() == 4);
  CHECK(complement(Graph::from_edges(3, {})).num_edges() == 3);

  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  const Graph cp4 = complement(p4);
  CHECK(cp4.num_edges() == 3);
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = 0; v < 4; ++v)
      if (u != v) CHECK(cp4.adjacent(u, v) != p4.adjacent(u, v));

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(1 + seed * 3, 0.3, seed);
    CHECK(complement(complement(g)).edges() == g.edges());
  }
}

TEST_CASE("dense view") {
  const Graph g = random_graph(70, 0.3, 3);
  const DenseGraph d = g.to_dense();
  CHECK(d.num_edges() == g.num_edges());
  for (Vertex u = 0; u < g.num_vertices(); ++u)
    for (Vertex v = 0; v < g.num_vertices(); ++v) CHECK(d.adjacent(u, v) == g.adjacent(u, v));
  const VertexSet sub{5, 1, 60};
  const DenseGraph ds = g.to_dense(sub);
  CHECK(ds.adjacent(0, 1) == g.adjacent(5, 1));
  CHECK(ds.adjacent(1, 2) == g.adjacent(1, 60));
  const DenseGraph dc = d.complement();
  CHECK(dc.num_edges() == 70 * 69 / 2 - g.num_edges());
}

TEST_CASE("two-hop neighbors") {
  const Graph star = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  CHECK(two_hop_neighbors(star, 0).empty());
  CHECK(two_hop_neighbors(star, 1) == VertexSet{2, 3, 4});

  const Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(two_hop_neighbors(path, 0) == VertexSet{2});

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_graph(12, 0.3, 40 + seed);
    for (Vertex s = 0; s < g.num_vertices(); ++s) {
      std::vector<int> dist(g.num_vertices(), -1);
      std::queue<Vertex> q;
      dist[s] = 0;
      q.push(s);
      while (!q.empty()) {
        const Vertex x = q.front();
        q.pop();
        for (Vertex y : g.neighbors(x))
          if (dist[y] < 0) {
            dist[y] = dist[x] + 1;
            q.push(y);
          }
      }
      VertexSet expected;
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (dist[v] == 2) expected.push_back(v);
      const VertexSet got = two_hop_neighbors(g, s);
      CHECK(got == expected);
      CHECK(g.degree(s) + got.size() + 1 <= g.num_vertices());
    }
  }
}

TEST_CASE("edge neighborhoods") {
  const Graph tri = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(edge_common_neighbors(tri, {0, 1}) == VertexSet{2});
  CHECK(edge_two_hop(tri, {0, 1}).empty());

  const Graph path = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(edge_common_neighbors(path, {1, 2}).empty());
  CHECK(edge_two_hop(path, {1, 2}) == VertexSet{0, 3});
  CHECK_THROWS_AS(edge_common_neighbors(path, {0, 2}), GraphError);
  CHECK_THROWS_AS(edge_two_hop(path, {0, 3}), GraphError);

  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Graph g = random_graph(12, 0.4, 70 + seed);
    for (const Edge& e : g.edges()) {
      VertexSet common;
      for (Vertex w = 0; w < g.num_vertices(); ++w)
        if (g.adjacent(w, e.u) && g.adjacent(w, e.v)) common.push_back(w);
      CHECK(edge_common_neighbors(g, e) == common);

      const VertexSet hu = two_hop_neighbors(g, e.u);
      const VertexSet hv = two_hop_neighbors(g, e.v);
      VertexSet expected;
      for (Vertex w = 0; w < g.num_vertices(); ++w) {
        const bool in_two = std::binary_search(hu.begin(), hu.end(), w) || std::binary_search(hv.begin(), hv.end(), w);
        const bool excluded = w == e.u || w == e.v || std::binary_search(common.begin(), common.end(), w);
        if (in_two && !excluded) expected.push_back(w);
      }
      CHECK(edge_two_hop(g, e) == expected);
    }
  }
}
