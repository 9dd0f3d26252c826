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
#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct Output {
  int code = -1;
  std::string text;
};

// Runs the CLI with stdout captured; stderr goes to /dev/null.
Output run(const std::string& args) {
  const std::string cmd = std::string("\"") + KPLEXER_CLI + "\" " + args + " 2>/dev/null";
  Output out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.text.append(buf.data(), got);
  const int status = pclose(pipe);
  out.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

std::filesystem::path scratch() {
  const auto dir = std::filesystem::temp_directory_path() / "kplexer_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("gen writes the instances") {
  const auto dir = scratch() / "gen";
  std::filesystem::remove_all(dir);
  const Output o = run("gen --name hamming6-4 --name johnson8-4-4 --out " + dir.string());
  CHECK(o.code == 0);
  CHECK(std::filesystem::exists(dir / "hamming6-4.clq"));
  CHECK(o.text.find("johnson8-4-4.clq n=70 m=1855") != std::string::npos);
  CHECK(run("gen --name nope --out " + dir.string()).code == 1);
}

TEST_CASE("solve") {
  const auto dir = scratch();
  {
    std::ofstream f(dir / "c5.txt");
    f << "# five cycle\n1 2\n2 3\n3 4\n4 5\n5 1\n";
  }
  const Output json = run("solve --graph " + (dir / "c5.txt").string() + " --k 2 --output json");
  REQUIRE(json.code == 0);
  const auto j = nlohmann::json::parse(json.text);
  CHECK(j["omega_k"] == 3);
  CHECK(j["n"] == 5);
  CHECK(j["witness"].size() == 3);

  const Output text = run("solve --graph " + (dir / "c5.txt").string() + " --k 1 --strategy edge --no-reduction");
  CHECK(text.code == 0);
  CHECK(text.text.find("omega_k     2") != std::string::npos);

  const Output csv = run("solve --graph " + (dir / "c5.txt").string() + " --k 3 --output csv --no-dbdd-bound");
  CHECK(csv.code == 0);
  CHECK(csv.text.rfind("graph,n,m,k,", 0) == 0);

  CHECK(run("solve --graph " + (dir / "c5.txt").string() + " --k 0").code == 1);
  CHECK(run("solve --graph " + (dir / "absent.txt").string() + " --k 2").code == 1);
  CHECK(run("solve --graph " + (dir / "c5.txt").string() + " --k 2 --strategy sideways").code == 1);
  {
    std::ofstream f(dir / "broken.txt");
    f << "1 2\n3\n";
  }
  CHECK(run("solve --graph " + (dir / "broken.txt").string() + " --k 2").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("--help").code == 0);
}

TEST_CASE("params") {
  const auto dir = scratch();
  {
    std::ofstream f(dir / "k4.txt");
    f << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
  }
  const Output o = run("params --graph " + (dir / "k4.txt").string() + " --k 1 --k 2 --output json");
  REQUIRE(o.code == 0);
  const auto j = nlohmann::json::parse(o.text);
  CHECK(j["d"] == 3);
  CHECK(j["cd"] == 2);
  CHECK(j["gaps"][0]["omega_k"] == 4);
  CHECK(j["gaps"][0]["g_k"] == 0);
  CHECK(j["gaps"][1]["cg_k"] == 2);
  const Output given = run("params --graph " + (dir / "k4.txt").string() + " --k 2 --omega 3");
  CHECK(given.code == 0);
  CHECK(given.text.find("k=2 omega_k=3 g_k=2 cg_k=3") != std::string::npos);
  CHECK(run("params --graph " + (dir / "k4.txt").string() + " --k 1 --k 2 --omega 1 --omega 2 --omega 3").code == 1);
}

TEST_CASE("bench") {
  const auto dir = scratch();
  {
    std::ofstream f(dir / "k4.txt");
    f << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    std::ofstream m(dir / "manifest.txt");
    m << "k4.txt 1,2\n";
  }
  const auto summary = dir / "summary.json";
  const Output o = run("bench --manifest " + (dir / "manifest.txt").string() + " --summary " + summary.string());
  CHECK(o.code == 0);
  CHECK(std::count(o.text.begin(), o.text.end(), '\n') == 3);
  REQUIRE(std::filesystem::exists(summary));
  std::ifstream in(summary);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["runs"] == 2);
  const Output rows = run("bench --manifest " + (dir / "manifest.txt").string() + " --output json --jobs 2");
  CHECK(rows.code == 0);
  CHECK(rows.text.find("\"omega_k\":4") != std::string::npos);
}
