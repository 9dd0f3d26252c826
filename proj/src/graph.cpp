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
#include "kplexer/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string_view>

namespace kplexer {

namespace {

constexpr Label kMaxVertices = std::numeric_limits<Vertex>::max() - 1;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r' || s[i] == ',')) ++i;
    const std::size_t start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r' && s[i] != ',') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

Label parse_label(std::string_view tok, std::size_t line) {
  Label value = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec == std::errc::result_out_of_range) throw ParseError(line, "vertex id overflow: '" + std::string(tok) + "'");
  if (ec != std::errc{} || ptr != end) throw ParseError(line, "expected a vertex id, got '" + std::string(tok) + "'");
  return value;
}

Graph parse_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#' || body.front() == '%') continue;
    const auto toks = split_ws(body);
    // Extra columns (weights, timestamps) are tolerated and ignored.
    if (toks.size() < 2) throw ParseError(line_no, "expected two vertex ids");
    raw.emplace_back(parse_label(toks[0], line_no), parse_label(toks[1], line_no));
  }

  if (raw.empty()) return Graph{};

  std::vector<Label> distinct;
  distinct.reserve(raw.size() * 2);
  for (const auto& [a, b] : raw) {
    distinct.push_back(a);
    distinct.push_back(b);
  }
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (distinct.front() == 0) {
    if (distinct.back() > kMaxVertices) throw ParseError(line_no, "vertex id overflow");
    for (const auto& [a, b] : raw) edges.push_back({static_cast<Vertex>(a), static_cast<Vertex>(b)});
    return Graph::from_edges(static_cast<std::size_t>(distinct.back()) + 1, edges);
  }
  if (distinct.size() > kMaxVertices) throw ParseError(line_no, "vertex id overflow");
  auto id_of = [&](Label l) {
    return static_cast<Vertex>(std::lower_bound(distinct.begin(), distinct.end(), l) - distinct.begin());
  };
  for (const auto& [a, b] : raw) edges.push_back({id_of(a), id_of(b)});
  const std::size_t n = distinct.size();
  return Graph::from_edges(n, edges, std::move(distinct));
}

Graph parse_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == 'c' || body.front() == '%' || body.front() == '#') continue;
    const auto toks = split_ws(body);
    if (toks[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (toks.size() < 4) throw ParseError(line_no, "expected 'p edge <n> <m>'");
      const Label nv = parse_label(toks[2], line_no);
      if (nv > kMaxVertices) throw ParseError(line_no, "vertex id overflow");
      n = static_cast<std::size_t>(nv);
      edges.reserve(static_cast<std::size_t>(std::min<Label>(parse_label(toks[3], line_no), Label{1} << 28)));
      have_header = true;
    } else if (toks[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge line before problem line");
      if (toks.size() < 3) throw ParseError(line_no, "expected 'e <u> <v>'");
      const Label a = parse_label(toks[1], line_no);
      const Label b = parse_label(toks[2], line_no);
      if (a == 0 || b == 0 || a > n || b > n) throw ParseError(line_no, "vertex id out of range 1.." + std::to_string(n));
      edges.push_back({static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)});
    } else {
      throw ParseError(line_no, "unrecognised line '" + std::string(body.substr(0, 32)) + "'");
    }
  }
  if (!have_header) throw ParseError(line_no, "missing problem line");
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = i + 1;
  return Graph::from_edges(n, edges, std::move(labels));
}

}  // namespace

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Label> labels) {
  if (!labels.empty() && labels.size() != n) throw GraphError("label table size does not match vertex count");
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) throw GraphError("edge endpoint out of range");
    if (e.u == e.v) continue;
    directed.push_back({e.u, e.v});
    directed.push_back({e.v, e.u});
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());

  Graph g;
  g.offsets_.assign(n + 1, 0);
  g.neighbors_.resize(directed.size());
  for (const Edge& e : directed) ++g.offsets_[e.u + 1];
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];
  for (std::size_t i = 0; i < directed.size(); ++i) g.neighbors_[i] = directed[i].v;

  // Identity labels are implicit.
  bool identity = true;
  for (std::size_t i = 0; i < labels.size() && identity; ++i) identity = labels[i] == i;
  if (!identity) g.labels_ = std::move(labels);
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v});
  return out;
}

DenseGraph Graph::to_dense() const {
  const std::size_t n = num_vertices();
  DenseGraph d(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : neighbors(u)) bits::set(d.row(u), v);
  return d;
}

DenseGraph Graph::to_dense(std::span<const Vertex> vertices) const {
  const std::size_t n = num_vertices();
  std::vector<std::uint32_t> local(n, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= n) throw GraphError("vertex out of range");
    local[vertices[i]] = static_cast<std::uint32_t>(i);
  }
  DenseGraph d(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (Vertex w : neighbors(vertices[i]))
      if (local[w] != std::numeric_limits<std::uint32_t>::max()) bits::set(d.row(i), local[w]);
  return d;
}

void Graph::check_invariants() const {
  std::size_t total = 0;
  for (Vertex u = 0; u < num_vertices(); ++u) {
    const auto nb = neighbors(u);
    total += nb.size();
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (nb[i] >= num_vertices()) throw GraphError("neighbor out of range");
      if (nb[i] == u) throw GraphError("self-loop");
      if (i > 0 && nb[i - 1] >= nb[i]) throw GraphError("neighbor list not strictly sorted");
      if (!adjacent(nb[i], u)) throw GraphError("adjacency not symmetric");
    }
  }
  if (total % 2 != 0 || total / 2 != num_edges()) throw GraphError("edge count mismatch");
}

GraphFormat detect_format(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  return (ext == ".clq" || ext == ".dimacs") ? GraphFormat::dimacs : GraphFormat::edge_list;
}

Graph parse_graph(std::istream& in, GraphFormat format) {
  Graph g = format == GraphFormat::dimacs ? parse_dimacs(in) : parse_edge_list(in);
  g.check_invariants();
  return g;
}

Graph read_graph(const std::filesystem::path& path, GraphFormat format) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return parse_graph(in, format);
}

Graph read_graph(const std::filesystem::path& path) { return read_graph(path, detect_format(path)); }

void write_dimacs(std::ostream& out, const Graph& g, const std::string& comment) {
  if (!comment.empty()) {
    std::istringstream lines(comment);
    std::string l;
    while (std::getline(lines, l)) out << "c " << l << '\n';
  }
  out << "p edge " << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  const std::size_t n = g.num_vertices();
  std::vector<std::uint32_t> local(n, std::numeric_limits<std::uint32_t>::max());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= n) throw GraphError("vertex " + std::to_string(s[i]) + " out of range");
    local[s[i]] = static_cast<std::uint32_t>(i);
  }
  std::vector<Edge> edges;
  std::vector<Label> labels(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    labels[i] = g.label(s[i]);
    for (Vertex w : g.neighbors(s[i]))
      if (local[w] != std::numeric_limits<std::uint32_t>::max() && local[w] > i)
        edges.push_back({static_cast<Vertex>(i), local[w]});
  }
  return {Graph::from_edges(s.size(), edges, std::move(labels)), std::vector<Vertex>(s.begin(), s.end())};
}

Graph complement(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  std::vector<char> mark(n, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w : g.neighbors(u)) mark[w] = 1;
    for (Vertex v = u + 1; v < n; ++v)
      if (!mark[v]) edges.push_back({u, v});
    for (Vertex w : g.neighbors(u)) mark[w] = 0;
  }
  return Graph::from_edges(n, edges, g.labels());
}

VertexSet two_hop_neighbors(const Graph& g, Vertex v) {
  if (v >= g.num_vertices()) throw GraphError("vertex out of range");
  std::vector<char> seen(g.num_vertices(), 0);
  seen[v] = 1;
  for (Vertex u : g.neighbors(v)) seen[u] = 1;
  VertexSet out;
  for (Vertex u : g.neighbors(v))
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet edge_common_neighbors(const Graph& g, Edge e) {
  if (e.u >= g.num_vertices() || e.v >= g.num_vertices() || !g.adjacent(e.u, e.v))
    throw GraphError("not an edge: {" + std::to_string(e.u) + ", " + std::to_string(e.v) + "}");
  const auto a = g.neighbors(e.u);
  const auto b = g.neighbors(e.v);
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet edge_two_hop(const Graph& g, Edge e) {
  const VertexSet common = edge_common_neighbors(g, e);
  const VertexSet hu = two_hop_neighbors(g, e.u);
  const VertexSet hv = two_hop_neighbors(g, e.v);
  VertexSet uni;
  std::set_union(hu.begin(), hu.end(), hv.begin(), hv.end(), std::back_inserter(uni));
  VertexSet out;
  for (Vertex w : uni)
    if (w != e.u && w != e.v && !std::binary_search(common.begin(), common.end(), w)) out.push_back(w);
  return out;
}

// DenseGraph members live here to keep bitset.hpp header-only for the hot helpers.
DenseGraph DenseGraph::complement_of(const Bitset& keep) const {
  const auto ids = keep.to_vector();
  DenseGraph out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (!adjacent(ids[i], ids[j])) out.add_edge(i, j);
  return out;
}

DenseGraph DenseGraph::induced(const Bitset& keep) const {
  const auto ids = keep.to_vector();
  DenseGraph out(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    for (std::size_t j = i + 1; j < ids.size(); ++j)
      if (adjacent(ids[i], ids[j])) out.add_edge(i, j);
  return out;
}

}  // namespace kplexer
