// Copyright 2026 The cspq authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "cspq/analysis.hpp"
#include "cspq/cli.hpp"
#include "cspq/errors.hpp"
#include "test_support.hpp"

using namespace cspq;
using namespace cspq::testing;
using cspq::cli::OutputFormat;
using cspq::cli::RunConfig;
using cspq::cli::Solver;
using nlohmann::json;

namespace {

std::string data_path(const char* name) {
  return std::string(CSPQ_DATA_DIR) + "/" + name;
}

// Writes content to a unique temp file removed at scope exit.
class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("cspq_test_" + std::to_string(counter++) + "_" +
              std::to_string(::getpid()) + ".txt"))
                .string();
    std::ofstream out(path_, std::ios::binary);
    out << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

RunConfig base_config(const std::string& path) {
  RunConfig config;
  config.input_path = path;
  return config;
}

}  // namespace

TEST_CASE("ingest reads instance files") {
  const CspInstance instance = cli::ingest(data_path("set1.txt"));
  CHECK(instance.n == 3);
  CHECK(instance.m == 3);

  SUBCASE("comments, blank lines and trailing whitespace are ignored") {
    TempFile file("# bundled first set\n\naaa  \naaa\r\n\nddd\n");
    const CspInstance parsed = cli::ingest(file.path());
    CHECK(parsed.n == 3);
    CHECK(parsed.strings[0] == u32("aaa"));
  }

  SUBCASE("a file with only a newline is an empty set") {
    TempFile file("\n");
    CHECK_THROWS_AS(cli::ingest(file.path()), EmptySetError);
  }

  SUBCASE("length mismatches carry the offending line") {
    TempFile file("ab\nabc\n");
    CHECK_THROWS_WITH_AS(cli::ingest(file.path()),
                         doctest::Contains(":2:"), LengthMismatchError);
  }

  SUBCASE("missing files raise an IO error") {
    CHECK_THROWS_AS(cli::ingest(data_path("absent.txt")), IoError);
  }
}

TEST_CASE("exact run on set #1 with defaults picks A = 2 and solves") {
  RunConfig config = base_config(data_path("set1.txt"));
  config.solver = Solver::Exact;
  const json report = cli::run_report(config);
  CHECK(report["P"] == "aaa");
  CHECK(report["params"]["A"] == 2.0);  // midpoint of (1, 3], rounded up
  CHECK(report["params"]["B"] == 1.0);
  CHECK(report["min_energy"] == 15.0);
  CHECK(report["invalid_count"] == 0);
  CHECK(report["advisor"]["gamma_suggested"] == 0.0);
}

TEST_CASE("SA run on set #4 reproduces the expected string") {
  RunConfig config = base_config(data_path("set4.txt"));
  config.solver = Solver::Sa;
  config.constraint_weight = 4.0;
  config.seed = 0;
  const json report = cli::run_report(config);
  CHECK(report["P"] == "abcjkl");
  CHECK(report["MOR"].get<double>() >= 0.5);
}

TEST_CASE("numeric Hamiltonian run on set #2") {
  RunConfig config = base_config(data_path("set2.txt"));
  config.solver = Solver::Exact;
  config.hamiltonian = HamiltonianVariant::Numeric;
  config.constraint_weight = 3.0;
  const json report = cli::run_report(config);
  CHECK(report["P"] == "ddd");
}

TEST_CASE("exact and decomposed agree on every bundled set") {
  const char* files[] = {"set1.txt", "set2.txt", "set3.txt", "set4.txt"};
  const double weights[] = {2.0, 3.0, 5.0, 4.0};
  for (int k = 0; k < 4; ++k) {
    RunConfig config = base_config(data_path(files[k]));
    config.constraint_weight = weights[k];
    config.solver = Solver::Exact;
    const json exact = cli::run_report(config);
    config.solver = Solver::Decomposed;
    const json decomposed = cli::run_report(config);
    CHECK(exact["P"] == decomposed["P"]);
    CHECK(exact["min_energy"].get<double>() ==
          doctest::Approx(decomposed["min_energy"].get<double>())
              .epsilon(1e-9));
  }
}

TEST_CASE("table and JSON renderings carry identical numbers") {
  RunConfig config = base_config(data_path("set3.txt"));
  config.solver = Solver::Sa;
  config.constraint_weight = 5.0;
  config.seed = 1;
  const json report = cli::run_report(config);

  config.output = OutputFormat::Table;
  const std::string table = cli::render(config, report);
  config.output = OutputFormat::Json;
  const std::string dumped = cli::render(config, report);
  const json parsed = json::parse(dumped);

  // The table renders exactly the numbers the JSON carries.
  CHECK(parsed == report);
  CHECK(table.find(format_number(report["params"]["A"].get<double>())) !=
        std::string::npos);
  CHECK(table.find(format_number(report["MOR"].get<double>())) !=
        std::string::npos);
  double or_p = 0.0;
  for (const json& item : report["results"]) {
    if (item["string"] == report["P"]) or_p = item["OR"].get<double>();
  }
  CHECK(table.find(format_number(or_p)) != std::string::npos);
  CHECK(table.find(report["P"].get<std::string>()) != std::string::npos);
  CHECK(table.find(format_number(report["min_energy"].get<double>())) !=
        std::string::npos);
}

TEST_CASE("window mode slices, solves and concatenates") {
  RunConfig config = base_config(data_path("set4.txt"));
  config.solver = Solver::Exact;
  config.constraint_weight = 4.0;
  config.window = 3;
  const json report = cli::run_report(config);
  CHECK(report["P"] == "abcjkl");
  CHECK(report["windows"].size() == 2);
  double window_total = 0.0;
  for (const json& entry : report["windows"]) {
    window_total += entry["min_energy"].get<double>();
  }
  CHECK(report["min_energy"].get<double>() ==
        doctest::Approx(window_total).epsilon(1e-12));

  SUBCASE("uneven widths still cover every position") {
    config.window = 4;  // slices of width 4 and 2
    const json uneven = cli::run_report(config);
    CHECK(uneven["P"] == "abcjkl");
    CHECK(uneven["windows"][0]["positions"]["last"] == 4);
    CHECK(uneven["windows"][1]["positions"]["first"] == 5);
  }

  SUBCASE("window widths beyond m are rejected") {
    config.window = 7;
    CHECK_THROWS_AS(cli::run_report(config), DomainError);
  }
}

TEST_CASE("single-string instances run without an advisor") {
  TempFile file("abc\n");
  RunConfig config = base_config(file.path());
  config.solver = Solver::Exact;
  const json report = cli::run_report(config);
  CHECK(report["advisor"].is_null());
  CHECK(report["params"]["A"] == 2.0);
  CHECK(report["P"] == "abc");
  CHECK(report["min_energy"] == 0.0);
}

TEST_CASE("run exit codes and diagnostics") {
  std::ostringstream out;
  std::ostringstream err;

  RunConfig good = base_config(data_path("set1.txt"));
  good.solver = Solver::Exact;
  CHECK(cli::run(good, out, err) == 0);
  CHECK(out.str().find("aaa") != std::string::npos);
  CHECK(err.str().empty());

  RunConfig missing = base_config(data_path("absent.txt"));
  CHECK(cli::run(missing, out, err) == 1);
  CHECK(err.str().find("error:") != std::string::npos);

  // 11 strings of length 3 = 33 variables: beyond the CLI exhaustive cap.
  std::string big;
  for (int k = 0; k < 11; ++k) big += "abc\n";
  TempFile file(big);
  RunConfig oversized = base_config(file.path());
  oversized.solver = Solver::Exact;
  std::ostringstream err2;
  CHECK(cli::run(oversized, out, err2) == 1);
  CHECK(err2.str().find("--solver decomposed") != std::string::npos);
}
