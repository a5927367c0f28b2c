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

#include "cspq/analysis.hpp"

#include <cstdio>
#include <iomanip>
#include <sstream>

#include "cspq/errors.hpp"
#include "cspq/unicode.hpp"

namespace cspq {

DecodedOutcome DecodedOutcome::valid(String value) {
  DecodedOutcome outcome;
  outcome.is_valid = true;
  outcome.value = std::move(value);
  return outcome;
}

DecodedOutcome DecodedOutcome::invalid(InvalidReason reason,
                                       std::size_t position) {
  DecodedOutcome outcome;
  outcome.is_valid = false;
  outcome.reason = reason;
  outcome.position = position;
  return outcome;
}

DecodedOutcome decode(const Assignment& assignment,
                      const CspInstance& instance, bool strict_one_hot) {
  if (assignment.size() != instance.n * instance.m) {
    throw LengthMismatchError("assignment has " +
                              std::to_string(assignment.size()) +
                              " bits, instance needs " +
                              std::to_string(instance.n * instance.m));
  }
  String value;
  value.reserve(instance.m);
  for (std::size_t i = 1; i <= instance.m; ++i) {
    std::size_t selected = 0;
    Symbol symbol = 0;
    bool conflict = false;
    for (std::size_t x = 1; x <= instance.n; ++x) {
      if (!assignment[(i - 1) * instance.n + (x - 1)]) continue;
      const Symbol s = instance.symbol(x, i);
      if (selected == 0) {
        symbol = s;
      } else if (s != symbol) {
        conflict = true;
      }
      ++selected;
    }
    if (selected == 0) {
      return DecodedOutcome::invalid(InvalidReason::ZeroSelected, i);
    }
    if (conflict || (strict_one_hot && selected > 1)) {
      return DecodedOutcome::invalid(InvalidReason::ConflictingSymbols, i);
    }
    value.push_back(symbol);
  }
  return DecodedOutcome::valid(std::move(value));
}

OccurrenceReport occurrence_report(const SampleSet& samples,
                                   const CspInstance& instance,
                                   bool strict_one_hot) {
  OccurrenceReport report;
  report.num_reads = samples.num_reads;
  for (const SampleRecord& record : samples.records) {
    const DecodedOutcome outcome =
        decode(record.assignment, instance, strict_one_hot);
    if (outcome.is_valid) {
      report.per_string[outcome.value].count += record.count;
    } else {
      report.invalid_count += record.count;
    }
  }
  for (auto& [value, entry] : report.per_string) {
    (void)value;
    entry.ratio = static_cast<double>(entry.count) /
                  static_cast<double>(samples.num_reads);
  }
  for (const auto& [value, entry] : report.per_string) {
    if (entry.ratio > report.mor) report.mor = entry.ratio;
  }
  if (report.mor > 0.0) {
    for (const auto& [value, entry] : report.per_string) {
      if (entry.ratio == report.mor) report.mor_strings.push_back(value);
    }
  }
  return report;
}

std::string format_number(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g", value);
  return buffer;
}

namespace {

std::string pad(std::string text, std::size_t width) {
  if (text.size() < width) text.append(width - text.size(), ' ');
  return text;
}

constexpr std::size_t kSetWidth = 12;
constexpr std::size_t kPWidth = 14;
constexpr std::size_t kNumWidth = 9;

}  // namespace

std::string format_table_header() {
  std::string line;
  line += pad("Set", kSetWidth);
  line += pad("P", kPWidth);
  line += pad("A", kNumWidth);
  line += pad("B", kNumWidth);
  line += pad("gamma", kNumWidth);
  line += pad("OR_P", kNumWidth);
  line += pad("MOR", kNumWidth);
  return line;
}

std::string format_table_row(const ResultRow& row) {
  std::string line;
  line += pad(row.set_label, kSetWidth);
  line += pad(row.p, kPWidth);
  line += pad(format_number(row.constraint_weight), kNumWidth);
  line += pad(format_number(row.objective_weight), kNumWidth);
  line += pad(row.gamma_known ? format_number(row.gamma) : "-", kNumWidth);
  line += pad(format_number(row.or_p), kNumWidth);
  line += pad(format_number(row.mor), kNumWidth);
  return line;
}

}  // namespace cspq
