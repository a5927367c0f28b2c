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

#ifndef CSPQ_CLI_HPP_INCLUDED
#define CSPQ_CLI_HPP_INCLUDED

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "cspq/advisor.hpp"
#include "cspq/builder.hpp"
#include "cspq/core.hpp"

namespace cspq::cli {

enum class Solver { Sa, Exact, Decomposed };
enum class OutputFormat { Table, Json };

/// Everything one invocation needs. Flags map onto these fields 1:1.
struct RunConfig {
  std::string input_path;
  HamiltonianVariant hamiltonian = HamiltonianVariant::Standard;
  std::optional<double> constraint_weight;  ///< A; advisor default when unset
  double objective_weight = 1.0;            ///< B
  std::size_t num_reads = 100;
  Solver solver = Solver::Sa;
  std::uint64_t seed = 0;
  LambdaSource lambda_source = LambdaSource::Exact;
  OutputFormat output = OutputFormat::Table;
  std::optional<std::size_t> window;  ///< substring width; whole run if unset
};

/// Reads an instance file: UTF-8 text, one string per line, blank lines and
/// lines starting with '#' ignored, trailing whitespace stripped. Errors
/// carry the offending line number. Throws IoError and validation errors.
CspInstance ingest(const std::string& path);

/// Executes the configured run and returns the full JSON report
/// (irrespective of the configured output format). Throws on any failure.
nlohmann::json run_report(const RunConfig& config);

/// Renders the report for the configured output format.
std::string render(const RunConfig& config, const nlohmann::json& report);

/// Runs end to end, writing the rendered report to out and diagnostics to
/// err. Returns 0 on success, 1 on any validation or solver failure.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace cspq::cli

#endif  // CSPQ_CLI_HPP_INCLUDED
