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

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "cspq/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "cspq: formulate closest-string instances as QUBO models, advise "
      "penalty parameters, and solve classically"};

  cspq::cli::RunConfig config;
  double constraint_weight = 0.0;
  std::size_t window = 0;

  app.add_option("input", config.input_path,
                 "Instance file: one string per line; blank lines and lines "
                 "starting with '#' are ignored")
      ->required();
  app.add_option("--hamiltonian", config.hamiltonian,
                 "Objective flavor (default standard)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cspq::HamiltonianVariant>{
              {"standard", cspq::HamiltonianVariant::Standard},
              {"numeric", cspq::HamiltonianVariant::Numeric}},
          CLI::ignore_case));
  auto* a_opt = app.add_option(
      "-A,--A", constraint_weight,
      "Constraint weight A (default: advisor midpoint of the selected range)");
  app.add_option("-B,--B", config.objective_weight,
                 "Objective weight B (default 1)");
  app.add_option("--num-reads", config.num_reads,
                 "Annealing reads for --solver sa (default 100)");
  app.add_option("--solver", config.solver,
                 "sa, exact or decomposed (default sa)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cspq::cli::Solver>{
              {"sa", cspq::cli::Solver::Sa},
              {"exact", cspq::cli::Solver::Exact},
              {"decomposed", cspq::cli::Solver::Decomposed}},
          CLI::ignore_case));
  app.add_option("--seed", config.seed, "Sampler seed (default 0)");
  app.add_option("--lambda-source", config.lambda_source,
                 "Bound variant for the suggested A range: paper or exact "
                 "(default exact)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cspq::LambdaSource>{
              {"paper", cspq::LambdaSource::Paper},
              {"exact", cspq::LambdaSource::Exact}},
          CLI::ignore_case));
  app.add_option("--output", config.output, "table or json (default table)")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, cspq::cli::OutputFormat>{
              {"table", cspq::cli::OutputFormat::Table},
              {"json", cspq::cli::OutputFormat::Json}},
          CLI::ignore_case));
  auto* window_opt = app.add_option(
      "--window", window,
      "Solve substrings of this width independently and concatenate");

  CLI11_PARSE(app, argc, argv);

  if (a_opt->count() > 0) config.constraint_weight = constraint_weight;
  if (window_opt->count() > 0) config.window = window;

  return cspq::cli::run(config, std::cout, std::cerr);
}
