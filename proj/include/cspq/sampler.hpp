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

#ifndef CSPQ_SAMPLER_HPP_INCLUDED
#define CSPQ_SAMPLER_HPP_INCLUDED

#include <cstdint>
#include <vector>

#include "cspq/builder.hpp"
#include "cspq/core.hpp"

namespace cspq {

/// Geometric cooling schedule for one annealing read. One sweep proposes
/// num_vars single-bit flips at a fixed temperature.
struct AnnealSchedule {
  double initial_temperature = 1.0;
  double final_temperature = 0.01;
  std::size_t sweeps = 1;
};

/// Initial temperature = largest absolute coefficient (clamped to at least
/// 1 so the schedule stays valid on constant models), final 0.01, and
/// 20 * num_vars sweeps.
AnnealSchedule default_schedule(const QuboModel& model);

/// One distinct sampled assignment with its energy and multiplicity.
struct SampleRecord {
  Assignment assignment;
  double energy = 0.0;
  std::size_t count = 0;
};

/// Aggregated result of num_reads independent reads. Records are sorted by
/// ascending energy (ties by assignment); counts sum to num_reads.
struct SampleSet {
  std::vector<SampleRecord> records;
  std::size_t num_reads = 0;
};

/// Global minimum plus every tied optimal assignment (sorted, capped).
struct ExhaustiveResult {
  double min_energy = 0.0;
  std::vector<Assignment> optima;
  bool tie_cap_hit = false;
};

/// Enumerates all 2^num_vars assignments (Gray-code incremental updates) and
/// returns the global minimum with every optimum within 1e-9, capped at
/// tie_cap ties. Throws TooManyVariablesError above max_vars.
ExhaustiveResult solve_exhaustive(const QuboModel& model,
                                  std::size_t max_vars = 24,
                                  std::size_t tie_cap = 10'000);

/// Ground state assembled from independent per-position blocks.
struct DecomposedResult {
  double min_energy = 0.0;
  Assignment assignment;
};

/// Solves each position's n-variable block exhaustively and concatenates the
/// block optima; block minima sum to the full-model minimum. Among tied
/// block optima the chosen one prefers a valid single-symbol selection with
/// the smallest code point. Throws TooManyVariablesError when n exceeds
/// max_vars_per_block.
DecomposedResult solve_decomposed(const CspInstance& instance,
                                  const PenaltyParams& params,
                                  const HamiltonianKind& kind,
                                  std::size_t max_vars_per_block = 24);

/// Classical stand-in for the multi-read annealing workflow: num_reads
/// independent restarts of Metropolis single-flip annealing under the
/// schedule. Read r draws from an RNG stream derived from (seed, r), so a
/// fixed (model, num_reads, schedule, seed) reproduces the SampleSet
/// bit-for-bit. Each read contributes the best assignment it visited.
SampleSet sample_sa(const QuboModel& model, std::size_t num_reads,
                    const AnnealSchedule& schedule, std::uint64_t seed);

}  // namespace cspq

#endif  // CSPQ_SAMPLER_HPP_INCLUDED
