// Copyright 2026 The CoverGrow Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <filesystem>
#include <fstream>
#include <sstream>

#include "covergrow/cli.h"
#include "doctest.h"

namespace covergrow::cli {
namespace {

namespace fs = std::filesystem;

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / "covergrow_cli_test") {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }

  std::string Write(const std::string& name, const std::string& text) const {
    const fs::path p = path_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

 private:
  fs::path path_;
};

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome Invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "covergrow");
  std::ostringstream out, err;
  const int code = Main(args, out, err);
  return {code, out.str(), err.str()};
}

TEST_CASE("vc golden outputs") {
  TempDir dir;
  const auto path3 = dir.Write("path3.graph", "graph 3 2\n0 1\n1 2\n");
  const auto r = Invoke({"vc", path3, "--algo", "matching"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "cost 2\ncover 0 1\nmis 2\n");

  const auto lr = Invoke({"vc", path3, "--algo", "local-ratio"});
  CHECK(lr.out == "cost 2\ncover 0 1\nmis 2\ncertificate 1\n");

  const auto perm = dir.Write("perm.txt", "1 0 2\n");
  const auto par = Invoke({"vc", path3, "--algo", "parallel-mis", "--perm", perm});
  CHECK(par.out == "cost 2\ncover 0 2\nmis 1\nrounds 1\n");

  const auto json = Invoke({"--json", "vc", path3, "--algo", "matching"});
  CHECK(json.out == "{\"cost\":2.0,\"cover\":[0,1],\"mis\":[2]}\n");
}

TEST_CASE("oracle golden output") {
  TempDir dir;
  const auto tri = dir.Write("tri.graph", "graph 3 3\n0 1\n1 2\n0 2\n");
  const auto r = Invoke({"oracle", "vc", tri});
  CHECK(r.code == kExitOk);
  CHECK(r.out.rfind("opt 2\n", 0) == 0);
}

TEST_CASE("ratio verdicts") {
  TempDir dir;
  const auto edge = dir.Write("edge13.graph", "graph 2 1\n0 1\nw 1 3\n");
  const auto r = Invoke({"ratio", "--algo", "neighbor", "--runs", "1000", "--seed", "0", edge});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("opt 1 bound 2 verdict pass") != std::string::npos);
  CHECK(r.out.rfind("mean ", 0) == 0);
}

TEST_CASE("same inputs give byte-identical reports") {
  TempDir dir;
  const auto g = dir.Write("g.graph",
                           "graph 6 7\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n0 3\nw 2 4\nw 5 0.5\n");
  const auto ew = dir.Write("g.ewgraph", "ewgraph 4 3\n0 1 1\n1 2 2\n2 3 1\n");
  const auto dag = dir.Write("g.dag", "dag 3 2\n0 1 1\n1 2 2\n");
  const auto chg = dir.Write("g.chg", "chg 4 2 2\n1 1 2 1 2\n2 2 2 2 3\n");
  const std::vector<std::vector<std::string>> commands = {
      {"vc", g, "--seed", "7"},
      {"vc", g, "--algo", "pitt", "--seed", "7"},
      {"vc", g, "--runs", "20", "--seed", "3"},
      {"pivot", g, "--seed", "7"},
      {"stc", g, "--seed", "7"},
      {"mind2m", ew, "--seed", "7"},
      {"ded2", dag, "--seed", "7"},
      {"colorec", chg, "--seed", "7", "--fill-labels", "uniform"},
      {"oracle", "cc", g},
  };
  for (const auto& c : commands) {
    const auto a = Invoke(c);
    const auto b = Invoke(c);
    CHECK(a.code == kExitOk);
    CHECK(a.out == b.out);
    CHECK_FALSE(a.out.empty());
  }
}

TEST_CASE("seed comes from the environment when not given") {
  TempDir dir;
  const auto g = dir.Write("g.graph", "graph 5 4\n0 1\n1 2\n2 3\n3 4\n");
  setenv("COVERGROW_SEED", "12", 1);
  const auto env = Invoke({"pivot", g});
  unsetenv("COVERGROW_SEED");
  CHECK(env.out == Invoke({"pivot", g, "--seed", "12"}).out);
}

TEST_CASE("exit codes") {
  TempDir dir;
  const auto bad = dir.Write("bad.graph", "graph 2 1\n0 0\n");
  const auto r = Invoke({"vc", bad});
  CHECK(r.code == kExitParse);
  CHECK(r.err.find("line 2") != std::string::npos);

  CHECK(Invoke({"vc", "/nonexistent/x.graph"}).code == kExitParse);
  CHECK(Invoke({"frobnicate"}).code == kExitUsage);
  CHECK(Invoke({"vc", bad, "--algo", "nope"}).code == kExitUsage);
  CHECK(Invoke({}).code == kExitUsage);
  CHECK(Invoke({"--help"}).code == kExitOk);

  const auto large = dir.Write("large.graph", "graph 30 0\n");
  CHECK(Invoke({"oracle", "vc", large}).code == kExitGuard);

  const auto star = dir.Write("star.graph", "graph 5 4\n0 1\n0 2\n0 3\n0 4\n");
  CHECK(Invoke({"ratio", star, "--runs", "10"}).code == kExitUsage);
}

TEST_CASE("weight warnings") {
  TempDir dir;
  const auto g = dir.Write("w.graph", "graph 2 1\n0 1\nw 1 3\n");
  CHECK(Invoke({"vc", g, "--algo", "matching"}).err.find("warning") != std::string::npos);
  CHECK(Invoke({"pivot", g}).err.find("warning") != std::string::npos);
  CHECK(Invoke({"vc", g}).err.empty());
}

TEST_CASE("bench rows") {
  const auto r = Invoke({"bench", "--family", "edgeless", "--sizes", "100000", "--reps", "1"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("row 100000 0 ") != std::string::npos);
  // cost column is 0 on an edgeless graph.
  const auto row = r.out.substr(r.out.find("row "));
  std::istringstream in(row);
  std::string tag;
  double n, m, ms, cost, rounds;
  in >> tag >> n >> m >> ms >> cost >> rounds;
  CHECK(cost == 0.0);

  BenchConfig config;
  config.algorithm = "parallel-mis";
  config.sizes = {256, 512};
  config.repetitions = 2;
  const auto rows = RunBench(config);
  REQUIRE(rows.size() == 2);
  for (const auto& b : rows) {
    CHECK(b.rounds >= 1);
    CHECK(b.m > 0);
  }
}

}  // namespace
}  // namespace covergrow::cli
