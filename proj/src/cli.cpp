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

#include "cspq/cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "cspq/analysis.hpp"
#include "cspq/distance.hpp"
#include "cspq/errors.hpp"
#include "cspq/sampler.hpp"
#include "cspq/unicode.hpp"

namespace cspq::cli {

namespace {

using nlohmann::json;

// The CLI lets exhaustive runs grow past the library default so that every
// bundled data set, including 30-variable ones, can be solved exactly.
constexpr std::size_t kCliExhaustiveMaxVars = 30;

const char* solver_name(Solver solver) {
  switch (solver) {
    case Solver::Sa: return "sa";
    case Solver::Exact: return "exact";
    case Solver::Decomposed: return "decomposed";
  }
  return "sa";
}

std::string file_stem(const std::string& path) {
  const std::size_t slash = path.find_last_of("/\\");
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos && dot > 0) name = name.substr(0, dot);
  return name;
}

std::string strip_trailing_whitespace(std::string line) {
  while (!line.empty() &&
         (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.pop_back();
  }
  return line;
}

/// Outcome of solving one instance (the whole run or a single window).
struct SolveOutcome {
  std::optional<String> p;
  double min_energy = 0.0;
  double or_p = 0.0;
  double mor = 0.0;
  std::size_t invalid_count = 0;
  json results = json::array();
  bool tie_cap_hit = false;
};

void fill_from_counts(SolveOutcome& outcome,
                      const std::map<String, std::size_t>& counts,
                      std::size_t denominator) {
  for (const auto& [value, count] : counts) {
    const double ratio =
        static_cast<double>(count) / static_cast<double>(denominator);
    outcome.results.push_back(
        {{"string", encode_utf8(value)}, {"N", count}, {"OR", ratio}});
    if (ratio > outcome.mor) outcome.mor = ratio;
  }
  // P is the smallest valid decoded string by code point, the documented
  // tie-breaking for exact solves. The map is already ordered.
  if (!counts.empty()) {
    outcome.p = counts.begin()->first;
    outcome.or_p = static_cast<double>(counts.begin()->second) /
                   static_cast<double>(denominator);
  }
}

SolveOutcome solve_exact(const CspInstance& instance,
                         const PenaltyParams& params,
                         const HamiltonianKind& kind) {
  const QuboModel model = build_hamiltonian(instance, params, kind);
  const ExhaustiveResult solved =
      solve_exhaustive(model, kCliExhaustiveMaxVars);
  SolveOutcome outcome;
  outcome.min_energy = solved.min_energy;
  outcome.tie_cap_hit = solved.tie_cap_hit;
  std::map<String, std::size_t> counts;
  for (const Assignment& bits : solved.optima) {
    const DecodedOutcome decoded = decode(bits, instance);
    if (decoded.is_valid) {
      ++counts[decoded.value];
    } else {
      ++outcome.invalid_count;
    }
  }
  fill_from_counts(outcome, counts, solved.optima.size());
  return outcome;
}

SolveOutcome solve_decomposed_run(const CspInstance& instance,
                                  const PenaltyParams& params,
                                  const HamiltonianKind& kind) {
  const DecomposedResult solved = solve_decomposed(instance, params, kind);
  SolveOutcome outcome;
  outcome.min_energy = solved.min_energy;
  const DecodedOutcome decoded = decode(solved.assignment, instance);
  std::map<String, std::size_t> counts;
  if (decoded.is_valid) {
    counts[decoded.value] = 1;
  } else {
    outcome.invalid_count = 1;
  }
  fill_from_counts(outcome, counts, 1);
  return outcome;
}

SolveOutcome solve_sa(const CspInstance& instance, const PenaltyParams& params,
                      const HamiltonianKind& kind, std::size_t num_reads,
                      std::uint64_t seed) {
  const QuboModel model = build_hamiltonian(instance, params, kind);
  const SampleSet samples =
      sample_sa(model, num_reads, default_schedule(model), seed);
  const OccurrenceReport report = occurrence_report(samples, instance);
  SolveOutcome outcome;
  outcome.min_energy = samples.records.front().energy;
  outcome.invalid_count = report.invalid_count;
  outcome.mor = report.mor;
  for (const auto& [value, entry] : report.per_string) {
    outcome.results.push_back({{"string", encode_utf8(value)},
                               {"N", entry.count},
                               {"OR", entry.ratio}});
  }
  if (!report.mor_strings.empty()) {
    outcome.p = report.mor_strings.front();
    outcome.or_p = report.per_string.at(*outcome.p).ratio;
  }
  return outcome;
}

SolveOutcome solve_one(const CspInstance& instance, const RunConfig& config,
                       const PenaltyParams& params,
                       const HamiltonianKind& kind) {
  switch (config.solver) {
    case Solver::Exact:
      return solve_exact(instance, params, kind);
    case Solver::Decomposed:
      return solve_decomposed_run(instance, params, kind);
    case Solver::Sa:
      return solve_sa(instance, params, kind, config.num_reads, config.seed);
  }
  throw DomainError("unknown solver");
}

json advisor_to_json(const AdvisorReport& report, LambdaSource source) {
  const ARange& selected = source == LambdaSource::Paper
                               ? report.a_range_paper
                               : report.a_range_exact;
  return json{
      {"B", report.objective_weight},
      {"lambda_paper", report.lambda_paper},
      {"lambda_exact", report.lambda_exact},
      {"A_upper_paper", report.a_upper_paper},
      {"A_upper_exact", report.a_upper_exact},
      {"A_range_paper",
       {{"lower", report.a_range_paper.lower},
        {"upper", report.a_range_paper.upper}}},
      {"A_range_exact",
       {{"lower", report.a_range_exact.lower},
        {"upper", report.a_range_exact.upper}}},
      {"A_range",
       {{"lower", selected.lower},
        {"upper", selected.upper},
        {"source", source == LambdaSource::Paper ? "paper" : "exact"}}},
      {"chain_case", to_string(report.chain_case)},
      {"gamma_suggested", report.gamma_suggested},
      {"symbol_spread", report.symbol_spread_v},
      {"capacity_P16", report.capacity_p16},
      {"max_strings_for_window", report.max_strings_for_window},
  };
}

double default_constraint_weight(const std::optional<AdvisorReport>& advisor,
                                 const RunConfig& config) {
  if (!advisor.has_value()) return 2.0 * config.objective_weight;
  const ARange& range = config.lambda_source == LambdaSource::Paper
                            ? advisor->a_range_paper
                            : advisor->a_range_exact;
  return std::ceil((range.lower + range.upper) / 2.0);
}

std::vector<CspInstance> window_slices(const CspInstance& instance,
                                       std::size_t width) {
  std::vector<CspInstance> slices;
  for (std::size_t start = 0; start < instance.m; start += width) {
    const std::size_t len = std::min(width, instance.m - start);
    std::vector<String> parts;
    parts.reserve(instance.n);
    for (const String& s : instance.strings)
      parts.push_back(s.substr(start, len));
    slices.push_back(validate_instance(parts));
  }
  return slices;
}

json outcome_to_json(const SolveOutcome& outcome) {
  json entry;
  entry["results"] = outcome.results;
  entry["MOR"] = outcome.mor;
  entry["invalid_count"] = outcome.invalid_count;
  entry["min_energy"] = outcome.min_energy;
  if (outcome.p.has_value()) {
    entry["P"] = encode_utf8(*outcome.p);
  } else {
    entry["P"] = nullptr;
  }
  return entry;
}

}  // namespace

CspInstance ingest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "'");
  std::vector<std::pair<std::size_t, String>> kept;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = strip_trailing_whitespace(std::move(line));
    if (line.empty() || line.front() == '#') continue;
    try {
      kept.emplace_back(line_number, decode_utf8(line));
    } catch (const EncodingError& e) {
      throw EncodingError(path + ":" + std::to_string(line_number) + ": " +
                          e.what());
    }
  }
  if (kept.empty()) {
    throw EmptySetError(path + ": no strings found");
  }
  const std::size_t m = kept.front().second.size();
  for (const auto& [ln, value] : kept) {
    if (value.size() != m) {
      throw LengthMismatchError(path + ":" + std::to_string(ln) +
                                ": string has length " +
                                std::to_string(value.size()) + ", expected " +
                                std::to_string(m));
    }
  }
  std::vector<String> strings;
  strings.reserve(kept.size());
  for (auto& [ln, value] : kept) strings.push_back(std::move(value));
  return validate_instance(strings);
}

json run_report(const RunConfig& config) {
  const CspInstance instance = ingest(config.input_path);
  if (!(config.objective_weight > 0.0)) {
    throw DomainError("B must be positive");
  }
  if (config.num_reads < 1) throw DomainError("num_reads must be at least 1");
  if (config.window.has_value() &&
      (*config.window < 1 || *config.window > instance.m)) {
    throw DomainError("window must lie in 1..m");
  }

  std::optional<AdvisorReport> advisor;
  if (instance.n >= 2) {
    advisor = advise(instance, config.objective_weight);
  }
  PenaltyParams params;
  params.objective_weight = config.objective_weight;
  params.constraint_weight = config.constraint_weight.has_value()
                                 ? *config.constraint_weight
                                 : default_constraint_weight(advisor, config);
  if (!(params.constraint_weight > 0.0)) {
    throw DomainError("A must be positive");
  }
  const HamiltonianKind kind =
      config.hamiltonian == HamiltonianVariant::Standard
          ? HamiltonianKind::standard()
          : HamiltonianKind::numeric();

  json report;
  report["instance"] = {{"n", instance.n}, {"m", instance.m}};
  report["advisor"] = advisor.has_value()
                          ? advisor_to_json(*advisor, config.lambda_source)
                          : json(nullptr);
  report["solver"] = solver_name(config.solver);
  report["params"] = {{"A", params.constraint_weight},
                      {"B", params.objective_weight},
                      {"num_reads", config.num_reads},
                      {"seed", config.seed}};

  if (!config.window.has_value()) {
    const SolveOutcome outcome = solve_one(instance, config, params, kind);
    report.update(outcome_to_json(outcome));
    return report;
  }

  // Window mode: independent solves of the substring instances, concatenated.
  report["window"] = *config.window;
  report["windows"] = json::array();
  double total_energy = 0.0;
  std::size_t total_invalid = 0;
  String concatenated;
  bool complete = true;
  std::size_t start = 1;
  for (const CspInstance& slice : window_slices(instance, *config.window)) {
    const SolveOutcome outcome = solve_one(slice, config, params, kind);
    json entry = outcome_to_json(outcome);
    entry["positions"] = {{"first", start}, {"last", start + slice.m - 1}};
    report["windows"].push_back(std::move(entry));
    total_energy += outcome.min_energy;
    total_invalid += outcome.invalid_count;
    if (outcome.p.has_value() && complete) {
      concatenated += *outcome.p;
    } else {
      complete = false;
    }
    start += slice.m;
  }
  report["results"] = json::array();
  report["MOR"] = nullptr;
  report["invalid_count"] = total_invalid;
  report["min_energy"] = total_energy;
  report["P"] = complete ? json(encode_utf8(concatenated)) : json(nullptr);
  return report;
}

std::string render(const RunConfig& config, const json& report) {
  if (config.output == OutputFormat::Json) {
    return report.dump(2) + "\n";
  }
  std::ostringstream out;
  out << "instance: n=" << report["instance"]["n"].get<std::size_t>()
      << " m=" << report["instance"]["m"].get<std::size_t>() << "\n";
  const json& advisor = report["advisor"];
  if (advisor.is_null()) {
    out << "advisor: n/a (single string)\n";
  } else {
    out << "advisor: B=" << format_number(advisor["B"].get<double>())
        << " lambda_paper=" << format_number(advisor["lambda_paper"].get<double>())
        << " lambda_exact=" << format_number(advisor["lambda_exact"].get<double>())
        << " A_paper=(" << format_number(advisor["A_range_paper"]["lower"].get<double>())
        << "," << format_number(advisor["A_range_paper"]["upper"].get<double>())
        << "] A_exact=(" << format_number(advisor["A_range_exact"]["lower"].get<double>())
        << "," << format_number(advisor["A_range_exact"]["upper"].get<double>())
        << "] chain=" << advisor["chain_case"].get<std::string>()
        << " gamma=" << format_number(advisor["gamma_suggested"].get<double>())
        << " spread=" << format_number(advisor["symbol_spread"].get<double>())
        << " P16_max_n=" << advisor["capacity_P16"].get<std::size_t>()
        << " P16_max_strings=" << advisor["max_strings_for_window"].get<std::size_t>()
        << "\n";
  }

  const double a = report["params"]["A"].get<double>();
  const double b = report["params"]["B"].get<double>();
  const double gamma =
      advisor.is_null() ? 0.0 : advisor["gamma_suggested"].get<double>();
  const std::string label = file_stem(config.input_path);

  out << format_table_header() << "\n";
  auto row_from = [&](const json& entry, const std::string& set_label) {
    ResultRow row;
    row.set_label = set_label;
    row.p = entry["P"].is_null() ? "-" : entry["P"].get<std::string>();
    row.constraint_weight = a;
    row.objective_weight = b;
    row.gamma = gamma;
    row.gamma_known = !advisor.is_null();
    row.or_p = 0.0;
    row.mor = entry["MOR"].is_null() ? 0.0 : entry["MOR"].get<double>();
    if (!entry["P"].is_null()) {
      for (const json& item : entry["results"]) {
        if (item["string"] == entry["P"]) {
          row.or_p = item["OR"].get<double>();
        }
      }
    }
    return row;
  };

  if (report.contains("window")) {
    std::size_t index = 1;
    for (const json& entry : report["windows"]) {
      out << format_table_row(
                 row_from(entry, label + "[" + std::to_string(index) + "]"))
          << "\n";
      ++index;
    }
    out << "P = "
        << (report["P"].is_null() ? std::string("-")
                                  : report["P"].get<std::string>())
        << "  min_energy = "
        << format_number(report["min_energy"].get<double>()) << "\n";
  } else {
    out << format_table_row(row_from(report, label)) << "\n";
    out << "min_energy = " << format_number(report["min_energy"].get<double>())
        << "\n";
  }
  out << "gamma is advisory; classical solvers ignore it\n";
  return out.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const json report = run_report(config);
    out << render(config, report);
    return 0;
  } catch (const TooManyVariablesError& e) {
    err << "error: " << e.what() << "\n";
    err << "hint: use --solver decomposed for instances this large\n";
    return 1;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cspq::cli
