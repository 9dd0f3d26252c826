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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kplexer/graph.hpp"
#include "kplexer/solver.hpp"

namespace kplexer {

/// One solver run as written by the CLI and the benchmark harness.
struct RunRecord {
  std::string graph;
  std::size_t n = 0;
  std::size_t m = 0;
  int k = 1;
  std::string strategy = "vertex";
  bool reductions = true;
  bool dbdd_bound = true;
  std::string status;
  std::size_t omega_k = 0;
  bool omega_exact = false;
  std::size_t d = 0;
  std::optional<std::size_t> cd;
  std::optional<long> g_k;
  std::optional<long> cg_k;
  std::int64_t elapsed_ms = 0;
  std::size_t lower_bound = 0;
  std::uint64_t subproblems = 0;
  std::uint64_t dbdd_nodes = 0;
  std::uint64_t branch_events = 0;
  int max_fanout = 0;
  double gamma = 1.0;
  /// Witness under the input file's labels.
  std::vector<Label> witness;
  /// Set when the run failed before producing a result; the other fields are then partial.
  std::string error;

  friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

RunRecord make_record(const std::string& name, const Graph& g, int k, const SolverConfig& cfg, const SolveResult& r);

std::string to_json(const RunRecord& r);
RunRecord record_from_json(const std::string& text);

/// Column names in output order.
const std::vector<std::string>& csv_columns();
std::string csv_header();
std::string to_csv_row(const RunRecord& r);

std::string to_text(const RunRecord& r);

/// Pearson correlation coefficient; nothing when either side has zero variance or fewer
/// than two points.
std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y);

struct ManifestEntry {
  std::filesystem::path path;
  std::vector<int> ks;
};

/// Lines of the form "PATH k1,k2,...". Blank lines and lines starting with '#' are skipped;
/// relative paths are resolved against `base`.
std::vector<ManifestEntry> parse_manifest(std::istream& in, const std::filesystem::path& base = {});
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

struct BenchOptions {
  SolverConfig config;
  unsigned jobs = 1;
  std::optional<GraphFormat> format;
  /// Skip cd(G) on graphs with more edges than this unless force_cd.
  std::size_t cd_edge_limit = 5'000'000;
  bool force_cd = false;
};

/// One record per (graph, k), in manifest order. Failures land in the record's error field.
std::vector<RunRecord> run_bench(const std::vector<ManifestEntry>& manifest, const BenchOptions& opts);

struct BenchSummary {
  std::size_t runs = 0;
  std::size_t solved = 0;
  /// Correlation of log10(elapsed_ms + 1) with each parameter over solved runs.
  std::optional<double> r_n;
  std::optional<double> r_d;
  std::optional<double> r_cd;
  std::optional<double> r_g_k;
  std::optional<double> r_cg_k;
};

BenchSummary summarize(const std::vector<RunRecord>& records);
std::string summary_json(const BenchSummary& s);

}  // namespace kplexer
