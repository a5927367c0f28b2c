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

#ifndef CSPQ_ADVISOR_HPP_INCLUDED
#define CSPQ_ADVISOR_HPP_INCLUDED

#include <cstddef>

#include "cspq/core.hpp"

namespace cspq {

// Tuning guidance for the constraint weight A, the chain-strength starting
// point gamma, and annealer capacity arithmetic. Two variants of the minimum
// penalty energy are carried side by side throughout: the closed-form
// "paper" guideline (piecewise in n) and the "exact" minimum A*m*(n-1); they
// disagree for n = 3 and n > 4, and neither is silently corrected.

/// Upper bounds on the objective term: the coarse closed-form B*m*n*(n-1)
/// and the instance-exact maximum (attained at the all-ones assignment).
struct ObjectiveBound {
  double coarse = 0.0;
  double exact = 0.0;
};

ObjectiveBound max_objective_bound(const CspInstance& instance,
                                   double objective_weight);

/// Closed-form guideline minimum of the penalty term: A*m for n = 2,
/// A*m*(n-1)*(n-2)/2 for n in {3, 4}, A*m*n for n > 4.
/// Throws DomainError for n < 2.
double min_penalty_paper(std::size_t m, std::size_t n,
                         double constraint_weight);

/// Exact minimum of the penalty term over all assignments: A*m*(n-1),
/// attained by one-hot (and certain two-hot) selections per position.
double min_penalty_exact(std::size_t m, std::size_t n,
                         double constraint_weight);

/// Which minimum-penalty variant drives the recommended A range.
enum class LambdaSource { Paper, Exact };

/// Open-closed interval (lower, upper] of recommended constraint weights.
struct ARange {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double value) const { return value > lower && value <= upper; }
};

/// (B, ceil(B*m*n*(n-1)/lambda)] with lambda the chosen per-A minimum
/// penalty. Throws DomainError for n < 2.
ARange a_range(const CspInstance& instance, double objective_weight,
               LambdaSource source);

/// Chain-strength classification. Baseline applies whenever n <= 4 (the
/// selector graph embeds without chains); cases 1..4 split n > 4 instances
/// by string count and symbol spread.
enum class ChainCase { Baseline, Case1, Case2, Case3, Case4 };

const char* to_string(ChainCase chain_case);

/// Suggested starting chain strength per case: 0 for Baseline, then 1, 2,
/// 4, 6 for cases 1..4.
double suggested_gamma(ChainCase chain_case);

/// Mean over positions of (|column symbols| - 1) / (n - 1), in [0, 1].
/// Values at or below 0.5 count as a low symbol spread. Zero when n < 2.
double symbol_spread(const CspInstance& instance);

struct ChainAdvice {
  ChainCase chain_case = ChainCase::Baseline;
  double gamma = 0.0;
};

/// Default classification: Baseline for n <= 4; otherwise low/high spread
/// (threshold 0.5) crossed with "less" (n <= 8) versus "higher" (n > 8)
/// string counts.
ChainAdvice chain_strength_guideline(const CspInstance& instance);

/// Same gamma table, but with the case forced by the caller. Use when an
/// externally chosen classification should override the default thresholds.
ChainAdvice chain_strength_guideline(const CspInstance& instance,
                                     ChainCase forced);

/// Capacity of a Pegasus working graph: max_n = 12*M - 10 strings when each
/// position is embedded alone, and floor(max_n / positions_per_embedding)
/// strings when that many positions are embedded at once.
struct QpuCapacity {
  std::size_t max_n = 0;
  std::size_t max_strings = 0;
};

QpuCapacity qpu_capacity(std::size_t working_graph_size,
                         std::size_t positions_per_embedding);

/// Everything the CLI reports before solving. Requires n >= 2.
struct AdvisorReport {
  double objective_weight = 1.0;  ///< B
  double lambda_paper = 0.0;      ///< min penalty per unit A, guideline form
  double lambda_exact = 0.0;      ///< min penalty per unit A, exact form
  double a_upper_paper = 0.0;
  double a_upper_exact = 0.0;
  ARange a_range_paper;
  ARange a_range_exact;
  ChainCase chain_case = ChainCase::Baseline;
  double gamma_suggested = 0.0;
  double symbol_spread_v = 0.0;
  std::size_t capacity_p16 = 0;
  std::size_t max_strings_for_window = 0;
};

AdvisorReport advise(const CspInstance& instance,
                     double objective_weight = 1.0);

}  // namespace cspq

#endif  // CSPQ_ADVISOR_HPP_INCLUDED
