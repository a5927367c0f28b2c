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

#include "cspq/advisor.hpp"

#include <cmath>

#include "cspq/distance.hpp"
#include "cspq/errors.hpp"

namespace cspq {

ObjectiveBound max_objective_bound(const CspInstance& instance,
                                   double objective_weight) {
  if (!(objective_weight > 0.0)) {
    throw DomainError("objective weight must be positive");
  }
  ObjectiveBound bound;
  bound.coarse = objective_weight * static_cast<double>(instance.m) *
                 static_cast<double>(instance.n) *
                 static_cast<double>(instance.n - 1);
  std::size_t mismatched_pairs = 0;
  for (std::size_t i = 1; i <= instance.m; ++i) {
    for (std::size_t x = 1; x <= instance.n; ++x) {
      mismatched_pairs +=
          column_distance(instance.symbol(x, i), i, instance);
    }
  }
  bound.exact = objective_weight * static_cast<double>(mismatched_pairs);
  return bound;
}

double min_penalty_paper(std::size_t m, std::size_t n,
                         double constraint_weight) {
  if (n < 2) throw DomainError("guideline minimum requires n >= 2");
  const double md = static_cast<double>(m);
  const double nd = static_cast<double>(n);
  if (n == 2) return constraint_weight * md;
  if (n <= 4) return constraint_weight * md * (nd - 1.0) * (nd - 2.0) / 2.0;
  return constraint_weight * md * nd;
}

double min_penalty_exact(std::size_t m, std::size_t n,
                         double constraint_weight) {
  // Per position the penalty of selecting k variables is
  // A*((n - k) + k*(k - 1)/2), minimized at k in {1, 2} with value A*(n-1).
  return constraint_weight * static_cast<double>(m) *
         static_cast<double>(n - 1);
}

ARange a_range(const CspInstance& instance, double objective_weight,
               LambdaSource source) {
  if (instance.n < 2) throw DomainError("a_range requires n >= 2");
  const double lambda = source == LambdaSource::Paper
                            ? min_penalty_paper(instance.m, instance.n, 1.0)
                            : min_penalty_exact(instance.m, instance.n, 1.0);
  const double numerator =
      max_objective_bound(instance, objective_weight).coarse;
  return ARange{objective_weight, std::ceil(numerator / lambda)};
}

const char* to_string(ChainCase chain_case) {
  switch (chain_case) {
    case ChainCase::Baseline: return "baseline";
    case ChainCase::Case1: return "case1";
    case ChainCase::Case2: return "case2";
    case ChainCase::Case3: return "case3";
    case ChainCase::Case4: return "case4";
  }
  return "baseline";
}

double suggested_gamma(ChainCase chain_case) {
  switch (chain_case) {
    case ChainCase::Baseline: return 0.0;
    case ChainCase::Case1: return 1.0;
    case ChainCase::Case2: return 2.0;
    case ChainCase::Case3: return 4.0;
    case ChainCase::Case4: return 6.0;
  }
  return 0.0;
}

double symbol_spread(const CspInstance& instance) {
  if (instance.n < 2) return 0.0;
  double total = 0.0;
  for (std::size_t i = 1; i <= instance.m; ++i) {
    total += static_cast<double>(position_alphabet(i, instance).symbols.size() - 1) /
             static_cast<double>(instance.n - 1);
  }
  return total / static_cast<double>(instance.m);
}

ChainAdvice chain_strength_guideline(const CspInstance& instance) {
  if (instance.n <= 4) return ChainAdvice{ChainCase::Baseline, 0.0};
  const bool low_spread = symbol_spread(instance) <= 0.5;
  const bool less_strings = instance.n <= 8;
  ChainCase chain_case;
  if (less_strings) {
    chain_case = low_spread ? ChainCase::Case1 : ChainCase::Case2;
  } else {
    chain_case = low_spread ? ChainCase::Case3 : ChainCase::Case4;
  }
  return ChainAdvice{chain_case, suggested_gamma(chain_case)};
}

ChainAdvice chain_strength_guideline(const CspInstance& instance,
                                     ChainCase forced) {
  (void)instance;
  return ChainAdvice{forced, suggested_gamma(forced)};
}

QpuCapacity qpu_capacity(std::size_t working_graph_size,
                         std::size_t positions_per_embedding) {
  if (working_graph_size < 1 || positions_per_embedding < 1) {
    throw DomainError("qpu_capacity requires positive arguments");
  }
  QpuCapacity capacity;
  capacity.max_n = 12 * working_graph_size - 10;
  capacity.max_strings = capacity.max_n / positions_per_embedding;
  return capacity;
}

AdvisorReport advise(const CspInstance& instance, double objective_weight) {
  if (instance.n < 2) throw DomainError("advise requires n >= 2");
  AdvisorReport report;
  report.objective_weight = objective_weight;
  report.lambda_paper = min_penalty_paper(instance.m, instance.n, 1.0);
  report.lambda_exact = min_penalty_exact(instance.m, instance.n, 1.0);
  report.a_range_paper = a_range(instance, objective_weight,
                                 LambdaSource::Paper);
  report.a_range_exact = a_range(instance, objective_weight,
                                 LambdaSource::Exact);
  report.a_upper_paper = report.a_range_paper.upper;
  report.a_upper_exact = report.a_range_exact.upper;
  const ChainAdvice advice = chain_strength_guideline(instance);
  report.chain_case = advice.chain_case;
  report.gamma_suggested = advice.gamma;
  report.symbol_spread_v = symbol_spread(instance);
  const QpuCapacity p16 = qpu_capacity(16, instance.m);
  report.capacity_p16 = qpu_capacity(16, 1).max_n;
  report.max_strings_for_window = p16.max_strings;
  return report;
}

}  // namespace cspq
