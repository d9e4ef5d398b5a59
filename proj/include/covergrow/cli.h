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

// Command-line front end for the `covergrow` tool.

#ifndef COVERGROW_CLI_H_
#define COVERGROW_CLI_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace covergrow::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitGuard = 3,
  kExitRatioFail = 4,
};

struct RunConfig {
  std::string subcommand;  // vc pivot stc mind2m ded2 colorec oracle ratio bench
  std::string input_path;
  std::uint64_t seed = 0;
  std::size_t runs = 1;
  std::string algorithm;
  // Named options: "perm", "json", "no-acyclic-check", "fill-labels",
  // "problem" (oracle), and the bench generator parameters.
  std::map<std::string, std::string> flags;
};

// Line-oriented key/value output. Each line is a key followed by values;
// the JSON form maps scalar and list lines to their values and collects
// repeated record lines into an array.
class Report {
 public:
  void Scalar(const std::string& key, nlohmann::json value);
  void List(const std::string& key, nlohmann::json values);
  void Record(const std::string& key, nlohmann::json values);
  // Several key/value pairs on one text line, e.g. "mean 1.5 stderr 0.01".
  void Pairs(const std::vector<std::pair<std::string, nlohmann::json>>& pairs);

  std::string Text() const;
  nlohmann::ordered_json Json() const;

 private:
  enum class Kind { kScalar, kList, kRecord, kPairs };
  struct Entry {
    Kind kind;
    std::string key;
    nlohmann::json values;
  };
  std::vector<Entry> entries_;
};

struct BenchConfig {
  std::string family = "gnp";  // gnp | sparse | edgeless
  std::string algorithm = "neighbor";  // neighbor | greedy-mis | parallel-mis
  std::vector<std::size_t> sizes;
  double edge_probability = 0.5;  // gnp
  double average_degree = 8.0;    // sparse
  bool weighted = false;          // integer weights 1..10
  std::size_t repetitions = 5;
  std::uint64_t seed = 0;
};

struct BenchRow {
  std::size_t n = 0;
  std::size_t m = 0;
  double median_ms = 0.0;  // median over repetitions, generation excluded
  double cost = 0.0;       // from the first repetition
  std::size_t rounds = 0;  // parallel-mis only; max over repetitions
};

std::vector<BenchRow> RunBench(const BenchConfig& config);

// Executes a parsed configuration, writing the report to `out` and
// diagnostics to `err`. Returns an ExitCode.
int Run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full command line including the program name.
int Main(const std::vector<std::string>& args, std::ostream& out,
         std::ostream& err);

}  // namespace covergrow::cli

#endif  // COVERGROW_CLI_H_
