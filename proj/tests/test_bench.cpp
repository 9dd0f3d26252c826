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
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "kplexer/bench.hpp"
#include "kplexer/instances.hpp"
#include "support.hpp"

using namespace kplexer;

namespace {

RunRecord sample() {
  RunRecord r;
  r.graph = "a,b \"quoted\".clq";
  r.n = 10;
  r.m = 20;
  r.k = 3;
  r.strategy = "hybrid";
  r.reductions = false;
  r.status = "optimal";
  r.omega_k = 6;
  r.omega_exact = true;
  r.d = 4;
  r.cd = 2;
  r.g_k = 1;
  r.elapsed_ms = 12;
  r.lower_bound = 5;
  r.subproblems = 7;
  r.dbdd_nodes = 99;
  r.branch_events = 3;
  r.max_fanout = 4;
  r.gamma = 2.5;
  r.witness = {1, 5, 9, 11, 12, 40};
  return r;
}

std::filesystem::path scratch_dir(const char* name) {
  const auto dir = std::filesystem::temp_directory_path() / name;
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("json round trip") {
  const RunRecord r = sample();
  CHECK(record_from_json(to_json(r)) == r);
  RunRecord failed;
  failed.graph = "x";
  failed.error = "boom";
  CHECK(record_from_json(to_json(failed)) == failed);
  CHECK_THROWS(record_from_json("{\"graph\": 3}"));
}

TEST_CASE("csv rows") {
  const RunRecord r = sample();
  const std::string header = csv_header();
  CHECK(header.rfind("graph,n,m,k,", 0) == 0);
  const std::string row = to_csv_row(r);
  CHECK(row.rfind("\"a,b \"\"quoted\"\".clq\",10,20,3,hybrid,0,1,optimal,6,1,4,2,1,,12,", 0) == 0);
  // One cell per column outside the quoted name.
  const std::string tail = row.substr(row.find(".clq\"") + 5);
  CHECK(std::count(tail.begin(), tail.end(), ',') + 1 == static_cast<long>(csv_columns().size()));
  CHECK(to_text(r).find("omega_k     6") != std::string::npos);
}

TEST_CASE("pearson") {
  CHECK_FALSE(pearson({1, 2, 3}, {5, 5, 5}));
  CHECK_FALSE(pearson({1}, {2}));
  CHECK(*pearson({1, 2, 3}, {2, 4, 6}) == doctest::Approx(1.0));
  CHECK(*pearson({1, 2, 3}, {3, 2, 1}) == doctest::Approx(-1.0));
  CHECK(*pearson({1, 2, 3, 4}, {1, 3, 2, 4}) == doctest::Approx(0.8));
}

TEST_CASE("manifest parsing") {
  std::istringstream in("# comment\n\ngraphs/a.clq 1,2,5\n/abs/b.txt 3\n");
  const auto entries = parse_manifest(in, "/base");
  REQUIRE(entries.size() == 2);
  CHECK(entries[0].path == std::filesystem::path("/base/graphs/a.clq"));
  CHECK(entries[0].ks == std::vector<int>{1, 2, 5});
  CHECK(entries[1].path == std::filesystem::path("/abs/b.txt"));
  std::istringstream bad("a.clq x\n");
  CHECK_THROWS(parse_manifest(bad));
  std::istringstream missing("a.clq\n");
  CHECK_THROWS(parse_manifest(missing));
}

TEST_CASE("bench runs and parallel jobs agree") {
  const auto dir = scratch_dir("kplexer_bench_test");
  {
    std::ofstream out(dir / "h.clq");
    write_dimacs(out, instances::hamming(6, 4));
    std::ofstream m(dir / "list.txt");
    m << "h.clq 1,2,3\nmissing.clq 2\n";
  }
  const auto manifest = read_manifest(dir / "list.txt");
  BenchOptions opts;
  opts.config.time_limit = std::chrono::duration<double>(60.0);
  const auto serial = run_bench(manifest, opts);
  opts.jobs = 3;
  const auto parallel = run_bench(manifest, opts);
  REQUIRE(serial.size() == 4);
  REQUIRE(parallel.size() == 4);
  CHECK(serial[0].omega_k == 4);
  CHECK(serial[1].omega_k == 6);
  CHECK(serial[2].omega_k == 8);
  CHECK(serial[3].error.size() > 0);
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].k == parallel[i].k);
    CHECK(serial[i].omega_k == parallel[i].omega_k);
    CHECK(serial[i].status == parallel[i].status);
  }
  const BenchSummary s = summarize(serial);
  CHECK(s.runs == 4);
  CHECK(s.solved == 3);
  // Every solved run is on the same graph, so n has no variance.
  CHECK_FALSE(s.r_n);
  CHECK(nlohmann::json::parse(summary_json(s))["pearson_log_time"]["n"].is_null());
  std::filesystem::remove_all(dir);
}
