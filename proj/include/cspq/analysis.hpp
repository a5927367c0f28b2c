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

#ifndef CSPQ_ANALYSIS_HPP_INCLUDED
#define CSPQ_ANALYSIS_HPP_INCLUDED

#include <map>
#include <string>
#include <vector>

#include "cspq/core.hpp"
#include "cspq/sampler.hpp"

namespace cspq {

/// Why an assignment failed to decode to a string.
enum class InvalidReason {
  ZeroSelected,        ///< a position selects no variable
  ConflictingSymbols,  ///< a position selects variables with distinct symbols
};

/// A candidate string recovered from an assignment, or the first offending
/// position when the selection pattern does not describe one.
struct DecodedOutcome {
  bool is_valid = false;
  String value;                 ///< set when valid; length m
  InvalidReason reason = InvalidReason::ZeroSelected;
  std::size_t position = 0;     ///< 1-based first offending position

  static DecodedOutcome valid(String value);
  static DecodedOutcome invalid(InvalidReason reason, std::size_t position);
};

/// Reads the selected symbols per position. Multiple selected variables at a
/// position are tolerated when they carry the same symbol; with
/// strict_one_hot they invalidate the position instead. Positions are
/// checked left to right and the first offense wins.
/// Throws LengthMismatchError unless assignment.size() == n*m.
DecodedOutcome decode(const Assignment& assignment,
                      const CspInstance& instance,
                      bool strict_one_hot = false);

struct OccurrenceEntry {
  std::size_t count = 0;  ///< N_P, reads decoding to this string
  double ratio = 0.0;     ///< OR_P = N_P / num_reads
};

/// Occurrence statistics of a sample set. Invalid reads stay in the
/// denominator but form no string bucket; an all-invalid set reports MOR 0.
struct OccurrenceReport {
  std::map<String, OccurrenceEntry> per_string;
  std::size_t invalid_count = 0;
  std::size_t num_reads = 0;
  double mor = 0.0;                 ///< max over per-string ratios
  std::vector<String> mor_strings;  ///< every string attaining the max
};

/// Aggregates decode() over the records, pooling distinct assignments that
/// decode to the same string.
OccurrenceReport occurrence_report(const SampleSet& samples,
                                   const CspInstance& instance,
                                   bool strict_one_hot = false);

/// One row of the fixed-width results table (Set, P, A, B, gamma, OR_P, MOR).
struct ResultRow {
  std::string set_label;
  std::string p;          ///< UTF-8 decoded solution string, or "-"
  double constraint_weight = 0.0;
  double objective_weight = 0.0;
  double gamma = 0.0;
  bool gamma_known = true;
  double or_p = 0.0;
  double mor = 0.0;
};

/// Formats numbers the same way everywhere so table and JSON renderings of
/// one run carry identical values.
std::string format_number(double value);

std::string format_table_header();
std::string format_table_row(const ResultRow& row);

}  // namespace cspq

#endif  // CSPQ_ANALYSIS_HPP_INCLUDED
