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
#include "kplexer/bench.hpp"

#include <atomic>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace kplexer {

using nlohmann::json;

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

template <typename T>
std::string cell(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

}  // namespace

RunRecord make_record(const std::string& name, const Graph& g, int k, const SolverConfig& cfg, const SolveResult& r) {
  RunRecord rec;
  rec.graph = name;
  rec.n = g.num_vertices();
  rec.m = g.num_edges();
  rec.k = k;
  rec.strategy = std::string(to_string(cfg.strategy));
  rec.reductions = cfg.reductions_enabled;
  rec.dbdd_bound = cfg.dbdd_bound_enabled;
  rec.status = std::string(to_string(r.status));
  rec.omega_k = r.omega_k;
  rec.omega_exact = r.omega_exact;
  rec.d = r.d;
  rec.cd = r.cd;
  rec.g_k = r.g_k;
  rec.cg_k = r.cg_k;
  rec.elapsed_ms = static_cast<std::int64_t>(std::llround(r.elapsed_seconds * 1000.0));
  rec.lower_bound = r.lower_bound;
  rec.subproblems = r.subproblems;
  rec.dbdd_nodes = r.stats.nodes;
  rec.branch_events = r.stats.branch_events;
  rec.max_fanout = r.stats.max_fanout;
  rec.gamma = r.gamma;
  for (Vertex v : r.witness) rec.witness.push_back(g.label(v));
  return rec;
}

std::string to_json(const RunRecord& r) {
  json j = {
      {"graph", r.graph},
      {"n", r.n},
      {"m", r.m},
      {"k", r.k},
      {"strategy", r.strategy},
      {"reductions", r.reductions},
      {"dbdd_bound", r.dbdd_bound},
      {"status", r.status},
      {"omega_k", r.omega_k},
      {"omega_exact", r.omega_exact},
      {"d", r.d},
      {"cd", opt(r.cd)},
      {"g_k", opt(r.g_k)},
      {"cg_k", opt(r.cg_k)},
      {"elapsed_ms", r.elapsed_ms},
      {"lower_bound", r.lower_bound},
      {"subproblems", r.subproblems},
      {"dbdd_nodes", r.dbdd_nodes},
      {"branch_events", r.branch_events},
      {"max_fanout", r.max_fanout},
      {"gamma", r.gamma},
      {"witness", r.witness},
      {"error", r.error},
  };
  return j.dump();
}

RunRecord record_from_json(const std::string& text) {
  const json j = json::parse(text);
  RunRecord r;
  r.graph = j.at("graph").get<std::string>();
  r.n = j.at("n").get<std::size_t>();
  r.m = j.at("m").get<std::size_t>();
  r.k = j.at("k").get<int>();
  r.strategy = j.at("strategy").get<std::string>();
  r.reductions = j.at("reductions").get<bool>();
  r.dbdd_bound = j.at("dbdd_bound").get<bool>();
  r.status = j.at("status").get<std::string>();
  r.omega_k = j.at("omega_k").get<std::size_t>();
  r.omega_exact = j.at("omega_exact").get<bool>();
  r.d = j.at("d").get<std::size_t>();
  r.cd = get_opt<std::size_t>(j, "cd");
  r.g_k = get_opt<long>(j, "g_k");
  r.cg_k = get_opt<long>(j, "cg_k");
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  r.lower_bound = j.at("lower_bound").get<std::size_t>();
  r.subproblems = j.at("subproblems").get<std::uint64_t>();
  r.dbdd_nodes = j.at("dbdd_nodes").get<std::uint64_t>();
  r.branch_events = j.at("branch_events").get<std::uint64_t>();
  r.max_fanout = j.at("max_fanout").get<int>();
  r.gamma = j.at("gamma").get<double>();
  r.witness = j.at("witness").get<std::vector<Label>>();
  r.error = j.value("error", std::string());
  return r;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "graph",  "n",         "m",           "k",           "strategy",    "reductions", "dbdd_bound",
      "status", "omega_k",   "omega_exact", "d",           "cd",          "g_k",        "cg_k",
      "elapsed_ms", "lower_bound", "subproblems", "dbdd_nodes", "branch_events", "max_fanout", "gamma", "error"};
  return cols;
}

std::string csv_header() {
  std::string out;
  for (const auto& c : csv_columns()) out += (out.empty() ? "" : ",") + c;
  return out;
}

std::string to_csv_row(const RunRecord& r) {
  const std::vector<std::string> cells = {csv_escape(r.graph),
                                          std::to_string(r.n),
                                          std::to_string(r.m),
                                          std::to_string(r.k),
                                          r.strategy,
                                          r.reductions ? "1" : "0",
                                          r.dbdd_bound ? "1" : "0",
                                          r.status,
                                          std::to_string(r.omega_k),
                                          r.omega_exact ? "1" : "0",
                                          std::to_string(r.d),
                                          cell(r.cd),
                                          cell(r.g_k),
                                          cell(r.cg_k),
                                          std::to_string(r.elapsed_ms),
                                          std::to_string(r.lower_bound),
                                          std::to_string(r.subproblems),
                                          std::to_string(r.dbdd_nodes),
                                          std::to_string(r.branch_events),
                                          std::to_string(r.max_fanout),
                                          fixed(r.gamma, 4),
                                          csv_escape(r.error)};
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out;
}

std::string to_text(const RunRecord& r) {
  std::ostringstream os;
  os << "graph       " << r.graph << "\n"
     << "n m         " << r.n << " " << r.m << "\n"
     << "k           " << r.k << "\n"
     << "strategy    " << r.strategy << (r.reductions ? "" : " no-reduction") << (r.dbdd_bound ? "" : " no-dbdd-bound")
     << "\n"
     << "status      " << r.status << "\n"
     << "omega_k     " << r.omega_k << (r.omega_exact ? "" : " (lower bound)") << "\n"
     << "d cd        " << r.d << " " << (r.cd ? std::to_string(*r.cd) : "-") << "\n"
     << "g_k cg_k    " << (r.g_k ? std::to_string(*r.g_k) : "-") << " " << (r.cg_k ? std::to_string(*r.cg_k) : "-")
     << "\n"
     << "elapsed_ms  " << r.elapsed_ms << "\n"
     << "dbdd nodes  " << r.dbdd_nodes << " (gamma " << fixed(r.gamma, 3) << ")\n"
     << "witness    ";
  for (Label l : r.witness) os << " " << l;
  os << "\n";
  if (!r.error.empty()) os << "error       " << r.error << "\n";
  return os.str();
}

std::optional<double> pearson(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  const double n = static_cast<double>(x.size());
  double mx = 0;
  double my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0;
  double sxx = 0;
  double syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx <= 0 || syy <= 0) return std::nullopt;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<ManifestEntry> parse_manifest(std::istream& in, const std::filesystem::path& base) {
  std::vector<ManifestEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    std::string path;
    std::string ks;
    ls >> path >> ks;
    if (ks.empty()) throw ParseError(lineno, "expected PATH k1,k2,...");
    ManifestEntry e;
    e.path = std::filesystem::path(path).is_absolute() || base.empty() ? std::filesystem::path(path) : base / path;
    std::istringstream kss(ks);
    std::string item;
    while (std::getline(kss, item, ',')) {
      try {
        std::size_t used = 0;
        const int k = std::stoi(item, &used);
        if (used != item.size() || k < 1) throw std::invalid_argument(item);
        e.ks.push_back(k);
      } catch (const std::exception&) {
        throw ParseError(lineno, "bad k value '" + item + "'");
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path.string());
  return parse_manifest(in, path.parent_path());
}

std::vector<RunRecord> run_bench(const std::vector<ManifestEntry>& manifest, const BenchOptions& opts) {
  struct Task {
    std::size_t entry;
    int k;
  };
  std::vector<Task> tasks;
  for (std::size_t i = 0; i < manifest.size(); ++i)
    for (int k : manifest[i].ks) tasks.push_back({i, k});

  std::vector<std::optional<Graph>> graphs(manifest.size());
  std::vector<std::string> load_errors(manifest.size());
  for (std::size_t i = 0; i < manifest.size(); ++i) {
    try {
      graphs[i] = opts.format ? read_graph(manifest[i].path, *opts.format) : read_graph(manifest[i].path);
    } catch (const std::exception& e) {
      load_errors[i] = e.what();
    }
  }

  std::vector<RunRecord> records(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t = next++; t < tasks.size(); t = next++) {
      const auto& task = tasks[t];
      const std::string name = manifest[task.entry].path.filename().string();
      RunRecord& rec = records[t];
      if (!graphs[task.entry]) {
        rec.graph = name;
        rec.k = task.k;
        rec.status = "error";
        rec.error = load_errors[task.entry];
        continue;
      }
      const Graph& g = *graphs[task.entry];
      SolverConfig cfg = opts.config;
      cfg.compute_cd = opts.force_cd || g.num_edges() <= opts.cd_edge_limit;
      try {
        rec = make_record(name, g, task.k, cfg, maple_solve(g, task.k, cfg));
      } catch (const std::exception& e) {
        rec = RunRecord{};
        rec.graph = name;
        rec.n = g.num_vertices();
        rec.m = g.num_edges();
        rec.k = task.k;
        rec.status = "error";
        rec.error = e.what();
      }
    }
  };
  const unsigned jobs = std::max(1U, opts.jobs);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < jobs; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return records;
}

BenchSummary summarize(const std::vector<RunRecord>& records) {
  BenchSummary s;
  s.runs = records.size();
  std::vector<double> t;
  std::vector<double> n;
  std::vector<double> d;
  std::vector<double> t_g;
  std::vector<double> g;
  std::vector<double> t_cd;
  std::vector<double> cd;
  std::vector<double> t_cg;
  std::vector<double> cg;
  for (const auto& r : records) {
    if (r.status != "optimal" && r.status != "trivial") continue;
    ++s.solved;
    const double lt = std::log10(static_cast<double>(r.elapsed_ms) + 1.0);
    t.push_back(lt);
    n.push_back(static_cast<double>(r.n));
    d.push_back(static_cast<double>(r.d));
    if (r.cd) {
      t_cd.push_back(lt);
      cd.push_back(static_cast<double>(*r.cd));
    }
    // Gaps need an exact optimum; trivial runs without one are left out.
    if (r.g_k) {
      t_g.push_back(lt);
      g.push_back(static_cast<double>(*r.g_k));
    }
    if (r.cg_k) {
      t_cg.push_back(lt);
      cg.push_back(static_cast<double>(*r.cg_k));
    }
  }
  s.r_n = pearson(t, n);
  s.r_d = pearson(t, d);
  s.r_cd = pearson(t_cd, cd);
  s.r_g_k = pearson(t_g, g);
  s.r_cg_k = pearson(t_cg, cg);
  return s;
}

std::string summary_json(const BenchSummary& s) {
  const json j = {{"runs", s.runs},
                  {"solved", s.solved},
                  {"pearson_log_time",
                   {{"n", opt(s.r_n)}, {"d", opt(s.r_d)}, {"cd", opt(s.r_cd)}, {"g_k", opt(s.r_g_k)}, {"cg_k", opt(s.r_cg_k)}}}};
  return j.dump();
}

}  // namespace kplexer
