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
// kplexer: command-line front end for the maximum k-plex solver.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kplexer/bench.hpp"
#include "kplexer/graph.hpp"
#include "kplexer/instances.hpp"
#include "kplexer/ordering.hpp"
#include "kplexer/solver.hpp"

namespace {

using namespace kplexer;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitTimeout = 2;

double default_time_limit() {
  if (const char* env = std::getenv("KPLEXER_TIME_LIMIT")) {
    try {
      const double v = std::stod(env);
      if (v > 0) return v;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring KPLEXER_TIME_LIMIT=" << env << "\n";
  }
  return 1800.0;
}

std::optional<GraphFormat> format_from(const std::string& s) {
  if (s == "edge-list") return GraphFormat::edge_list;
  if (s == "dimacs") return GraphFormat::dimacs;
  return std::nullopt;
}

Graph load(const std::string& path, const std::string& format) {
  if (format == "auto") return read_graph(path);
  return read_graph(path, *format_from(format));
}

struct SolveArgs {
  std::string graph;
  int k = 0;
  std::string strategy = "vertex";
  double time_limit = 1800.0;
  bool no_reduction = false;
  bool no_dbdd_bound = false;
  bool force_cd = false;
  std::string format = "auto";
  std::string output = "text";
};

int cmd_solve(const SolveArgs& a) {
  const Graph g = load(a.graph, a.format);
  SolverConfig cfg;
  cfg.strategy = *parse_strategy(a.strategy);
  cfg.reductions_enabled = !a.no_reduction;
  cfg.dbdd_bound_enabled = !a.no_dbdd_bound;
  cfg.time_limit = std::chrono::duration<double>(a.time_limit);
  cfg.compute_cd = a.force_cd || g.num_edges() <= 5'000'000;
  const SolveResult r = maple_solve(g, a.k, cfg);
  const RunRecord rec = make_record(std::filesystem::path(a.graph).filename().string(), g, a.k, cfg, r);
  if (a.output == "json") {
    std::cout << to_json(rec) << "\n";
  } else if (a.output == "csv") {
    std::cout << csv_header() << "\n" << to_csv_row(rec) << "\n";
  } else {
    std::cout << to_text(rec);
  }
  return r.status == SolveStatus::timeout ? kExitTimeout : kExitOk;
}

struct ParamsArgs {
  std::string graph;
  std::string format = "auto";
  std::vector<int> ks;
  std::vector<long> omegas;
  bool force_cd = false;
  double time_limit = 1800.0;
  std::string output = "text";
};

int cmd_params(const ParamsArgs& a) {
  const Graph g = load(a.graph, a.format);
  if (!a.omegas.empty() && a.omegas.size() != a.ks.size() && a.omegas.size() != 1)
    throw CLI::ValidationError("--omega", "give one value or one per --k");
  const std::size_t d = degeneracy_ordering(g).degeneracy;
  std::optional<std::size_t> cd;
  if (a.force_cd || g.num_edges() <= 5'000'000) cd = community_degeneracy_ordering(g).community_degeneracy;

  nlohmann::json rows = nlohmann::json::array();
  int status = kExitOk;
  for (std::size_t i = 0; i < a.ks.size(); ++i) {
    const int k = a.ks[i];
    std::optional<long> omega;
    if (!a.omegas.empty()) omega = a.omegas.size() == 1 ? a.omegas[0] : a.omegas[i];
    if (!omega) {
      SolverConfig cfg;
      cfg.time_limit = std::chrono::duration<double>(a.time_limit);
      cfg.compute_cd = false;
      const SolveResult r = maple_solve(g, k, cfg);
      if (r.status == SolveStatus::timeout) status = kExitTimeout;
      if (r.omega_exact) omega = static_cast<long>(r.omega_k);
    }
    nlohmann::json row = {{"k", k}, {"omega_k", nullptr}, {"g_k", nullptr}, {"cg_k", nullptr}};
    if (omega) {
      row["omega_k"] = *omega;
      row["g_k"] = static_cast<long>(d) + k - *omega;
      if (cd) row["cg_k"] = static_cast<long>(*cd) + 2L * k - *omega;
    }
    rows.push_back(row);
  }

  if (a.output == "json") {
    nlohmann::json out = {{"graph", std::filesystem::path(a.graph).filename().string()},
                          {"n", g.num_vertices()},
                          {"m", g.num_edges()},
                          {"d", d},
                          {"cd", cd ? nlohmann::json(*cd) : nlohmann::json(nullptr)},
                          {"gaps", rows}};
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "n  " << g.num_vertices() << "\nm  " << g.num_edges() << "\nd  " << d << "\ncd "
              << (cd ? std::to_string(*cd) : "-") << "\n";
    for (const auto& row : rows) {
      auto show = [](const nlohmann::json& v) { return v.is_null() ? std::string("-") : v.dump(); };
      std::cout << "k=" << row["k"] << " omega_k=" << show(row["omega_k"]) << " g_k=" << show(row["g_k"])
                << " cg_k=" << show(row["cg_k"]) << "\n";
    }
  }
  return status;
}

struct BenchArgs {
  std::string manifest;
  unsigned jobs = 1;
  std::string strategy = "vertex";
  double time_limit = 1800.0;
  bool no_reduction = false;
  bool no_dbdd_bound = false;
  bool force_cd = false;
  std::string format = "auto";
  std::string output = "csv";
  std::string summary;
};

int cmd_bench(const BenchArgs& a) {
  BenchOptions opts;
  opts.config.strategy = *parse_strategy(a.strategy);
  opts.config.reductions_enabled = !a.no_reduction;
  opts.config.dbdd_bound_enabled = !a.no_dbdd_bound;
  opts.config.time_limit = std::chrono::duration<double>(a.time_limit);
  opts.jobs = a.jobs;
  opts.force_cd = a.force_cd;
  if (a.format != "auto") opts.format = format_from(a.format);
  const auto records = run_bench(read_manifest(a.manifest), opts);
  if (a.output == "json") {
    for (const auto& r : records) std::cout << to_json(r) << "\n";
  } else {
    std::cout << csv_header() << "\n";
    for (const auto& r : records) std::cout << to_csv_row(r) << "\n";
  }
  const std::string summary = summary_json(summarize(records));
  std::cerr << summary << "\n";
  if (!a.summary.empty()) {
    std::ofstream out(a.summary);
    if (!out) throw GraphError("cannot write " + a.summary);
    out << summary << "\n";
  }
  return kExitOk;
}

struct GenArgs {
  std::vector<std::string> names;
  std::string out = ".";
};

int cmd_gen(const GenArgs& a) {
  std::vector<std::string> names = a.names.empty() ? instances::known_names() : a.names;
  std::filesystem::create_directories(a.out);
  for (const auto& name : names) {
    const auto g = instances::by_name(name);
    if (!g) throw CLI::ValidationError("--name", "unknown instance " + name);
    const auto path = std::filesystem::path(a.out) / (name + ".clq");
    std::ofstream out(path);
    if (!out) throw GraphError("cannot write " + path.string());
    write_dimacs(out, *g, name);
    std::cout << path.string() << " n=" << g->num_vertices() << " m=" << g->num_edges() << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact maximum k-plex solver"};
  app.require_subcommand(1);

  const std::vector<std::string> strategies = {"vertex", "edge", "hybrid"};
  const std::vector<std::string> formats = {"auto", "edge-list", "dimacs"};
  const double limit = default_time_limit();

  SolveArgs sa;
  sa.time_limit = limit;
  auto* solve = app.add_subcommand("solve", "Compute a maximum k-plex");
  solve->add_option("--graph", sa.graph, "Input graph file")->required()->check(CLI::ExistingFile);
  solve->add_option("--k", sa.k, "Plex parameter")->required()->check(CLI::PositiveNumber);
  solve->add_option("--strategy", sa.strategy, "Anchor decomposition")->check(CLI::IsMember(strategies))->capture_default_str();
  solve->add_option("--time-limit", sa.time_limit, "Seconds (env KPLEXER_TIME_LIMIT)")->check(CLI::PositiveNumber)->capture_default_str();
  solve->add_flag("--no-reduction", sa.no_reduction, "Disable second- and higher-order reductions");
  solve->add_flag("--no-dbdd-bound", sa.no_dbdd_bound, "Disable bound pruning in DBDD");
  solve->add_flag("--force-cd", sa.force_cd, "Compute cd(G) even on very large graphs");
  solve->add_option("--format", sa.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
  solve->add_option("--output", sa.output, "Report format")->check(CLI::IsMember({"text", "json", "csv"}))->capture_default_str();

  ParamsArgs pa;
  pa.time_limit = limit;
  auto* params = app.add_subcommand("params", "Print d(G), cd(G) and the gaps");
  params->add_option("--graph", pa.graph, "Input graph file")->required()->check(CLI::ExistingFile);
  params->add_option("--format", pa.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
  params->add_option("--k", pa.ks, "Plex parameters for the gap columns")->check(CLI::PositiveNumber);
  params->add_option("--omega", pa.omegas, "Known optimum per --k instead of solving");
  params->add_flag("--force-cd", pa.force_cd, "Compute cd(G) even on very large graphs");
  params->add_option("--time-limit", pa.time_limit, "Seconds per solve")->check(CLI::PositiveNumber)->capture_default_str();
  params->add_option("--output", pa.output, "Report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  BenchArgs ba;
  ba.time_limit = limit;
  auto* bench = app.add_subcommand("bench", "Run a manifest of (graph, k) pairs");
  bench->add_option("--manifest", ba.manifest, "Lines of 'PATH k1,k2,...'")->required()->check(CLI::ExistingFile);
  bench->add_option("--jobs", ba.jobs, "Solves run in parallel")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--strategy", ba.strategy, "Anchor decomposition")->check(CLI::IsMember(strategies))->capture_default_str();
  bench->add_option("--time-limit", ba.time_limit, "Seconds per solve")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_flag("--no-reduction", ba.no_reduction, "Disable second- and higher-order reductions");
  bench->add_flag("--no-dbdd-bound", ba.no_dbdd_bound, "Disable bound pruning in DBDD");
  bench->add_flag("--force-cd", ba.force_cd, "Compute cd(G) even on very large graphs");
  bench->add_option("--format", ba.format, "Input format")->check(CLI::IsMember(formats))->capture_default_str();
  bench->add_option("--output", ba.output, "Row format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  bench->add_option("--summary", ba.summary, "Also write the correlation summary here");

  GenArgs ga;
  auto* gen = app.add_subcommand("gen", "Write the built-in benchmark instances as DIMACS files");
  gen->add_option("--name", ga.names, "Instance names (default: all)");
  gen->add_option("--out", ga.out, "Output directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (*solve) return cmd_solve(sa);
    if (*params) return cmd_params(pa);
    if (*bench) return cmd_bench(ba);
    if (*gen) return cmd_gen(ga);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
