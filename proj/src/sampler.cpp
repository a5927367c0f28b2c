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

#include "cspq/sampler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <string>

#include "cspq/errors.hpp"

namespace cspq {

namespace {

constexpr double kTieTolerance = 1e-9;

// Flattened adjacency of the quadratic terms, for O(degree) single-flip
// energy deltas.
struct Adjacency {
  std::vector<double> linear;
  std::vector<std::size_t> offsets;   // per variable, into neighbors/weights
  std::vector<std::uint32_t> neighbors;
  std::vector<double> weights;
};

Adjacency build_adjacency(const QuboModel& model) {
  const std::size_t nv = model.num_vars();
  Adjacency adj;
  adj.linear.assign(nv, 0.0);
  for (const auto& [u, c] : model.linear_terms()) adj.linear[u] = c;
  std::vector<std::size_t> degree(nv, 0);
  for (const auto& [key, c] : model.quadratic_terms()) {
    (void)c;
    ++degree[key.first];
    ++degree[key.second];
  }
  adj.offsets.assign(nv + 1, 0);
  for (std::size_t u = 0; u < nv; ++u) {
    adj.offsets[u + 1] = adj.offsets[u] + degree[u];
  }
  adj.neighbors.resize(adj.offsets[nv]);
  adj.weights.resize(adj.offsets[nv]);
  std::vector<std::size_t> cursor(adj.offsets.begin(), adj.offsets.end() - 1);
  for (const auto& [key, c] : model.quadratic_terms()) {
    adj.neighbors[cursor[key.first]] = static_cast<std::uint32_t>(key.second);
    adj.weights[cursor[key.first]++] = c;
    adj.neighbors[cursor[key.second]] = static_cast<std::uint32_t>(key.first);
    adj.weights[cursor[key.second]++] = c;
  }
  return adj;
}

// Energy change of flipping bit u in the state described by mask.
inline double flip_delta(const Adjacency& adj, std::uint64_t mask,
                         std::size_t u) {
  double field = adj.linear[u];
  for (std::size_t k = adj.offsets[u]; k < adj.offsets[u + 1]; ++k) {
    if ((mask >> adj.neighbors[k]) & 1u) field += adj.weights[k];
  }
  return ((mask >> u) & 1u) ? -field : field;
}

Assignment assignment_from_mask(std::uint64_t mask, std::size_t nv) {
  Assignment bits(nv, 0);
  for (std::size_t u = 0; u < nv; ++u) bits[u] = (mask >> u) & 1u;
  return bits;
}

std::uint64_t derive_stream_seed(std::uint64_t seed, std::uint64_t read) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(seed ^ mix(read + 1));
}

// Uniform helpers on top of mt19937_64 so sampling stays identical across
// standard libraries.
inline double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

}  // namespace

AnnealSchedule default_schedule(const QuboModel& model) {
  AnnealSchedule schedule;
  schedule.initial_temperature = std::max(model.max_abs_coefficient(), 1.0);
  schedule.final_temperature = 0.01;
  schedule.sweeps = std::max<std::size_t>(20 * model.num_vars(), 1);
  return schedule;
}

ExhaustiveResult solve_exhaustive(const QuboModel& model, std::size_t max_vars,
                                  std::size_t tie_cap) {
  const std::size_t nv = model.num_vars();
  if (nv > max_vars || nv >= 63) {
    throw TooManyVariablesError("model has " + std::to_string(nv) +
                                " variables, exhaustive limit is " +
                                std::to_string(std::min<std::size_t>(
                                    max_vars, 62)));
  }
  const Adjacency adj = build_adjacency(model);

  std::uint64_t mask = 0;
  double e = model.offset();
  double best = e;
  std::vector<std::uint64_t> optima{0};
  bool cap_hit = false;

  const std::uint64_t total = std::uint64_t{1} << nv;
  for (std::uint64_t t = 1; t < total; ++t) {
    // Gray-code order: step t flips bit ctz(t), so exactly one bit changes.
    const auto u = static_cast<std::size_t>(std::countr_zero(t));
    e += flip_delta(adj, mask, u);
    mask ^= std::uint64_t{1} << u;
    if (e < best - kTieTolerance) {
      best = e;
      optima.assign(1, mask);
      cap_hit = false;
    } else if (e <= best + kTieTolerance) {
      if (optima.size() < tie_cap) {
        optima.push_back(mask);
      } else {
        cap_hit = true;
      }
    }
  }

  // Re-evaluate candidates exactly; incremental accumulation may drift for
  // non-integer coefficients.
  ExhaustiveResult result;
  result.tie_cap_hit = cap_hit;
  std::vector<std::pair<double, Assignment>> scored;
  scored.reserve(optima.size());
  double exact_best = std::numeric_limits<double>::infinity();
  for (std::uint64_t candidate : optima) {
    Assignment bits = assignment_from_mask(candidate, nv);
    const double exact = model.energy(bits);
    exact_best = std::min(exact_best, exact);
    scored.emplace_back(exact, std::move(bits));
  }
  result.min_energy = exact_best;
  for (auto& [value, bits] : scored) {
    if (value <= exact_best + kTieTolerance) {
      result.optima.push_back(std::move(bits));
    }
  }
  std::sort(result.optima.begin(), result.optima.end());
  return result;
}

namespace {

// Among tied block optima, prefer a selection whose chosen symbols agree
// (decodes to a single symbol), then the smallest such symbol, then the
// lexicographically smallest bit pattern.
Assignment choose_block_optimum(const std::vector<Assignment>& optima,
                                const CspInstance& instance, std::size_t i) {
  const Symbol sentinel = std::numeric_limits<Symbol>::max();
  const Assignment* chosen = nullptr;
  int chosen_rank = 2;
  Symbol chosen_symbol = sentinel;
  for (const Assignment& bits : optima) {
    Symbol symbol = sentinel;
    int rank = 1;  // invalid until proven single-symbol
    bool any = false;
    bool conflict = false;
    for (std::size_t x = 1; x <= instance.n; ++x) {
      if (!bits[x - 1]) continue;
      const Symbol s = instance.symbol(x, i);
      if (!any) {
        symbol = s;
        any = true;
      } else if (s != symbol) {
        conflict = true;
      }
    }
    if (any && !conflict) rank = 0;
    if (rank < chosen_rank ||
        (rank == chosen_rank && rank == 0 && symbol < chosen_symbol)) {
      chosen = &bits;
      chosen_rank = rank;
      chosen_symbol = symbol;
    }
  }
  return *chosen;
}

}  // namespace

DecomposedResult solve_decomposed(const CspInstance& instance,
                                  const PenaltyParams& params,
                                  const HamiltonianKind& kind,
                                  std::size_t max_vars_per_block) {
  if (instance.n > max_vars_per_block) {
    throw TooManyVariablesError("per-position blocks have " +
                                std::to_string(instance.n) +
                                " variables, limit is " +
                                std::to_string(max_vars_per_block));
  }
  DecomposedResult result;
  result.assignment.assign(instance.n * instance.m, 0);
  for (std::size_t i = 1; i <= instance.m; ++i) {
    const QuboModel block = build_per_position(instance, params, kind, i);
    const ExhaustiveResult solved =
        solve_exhaustive(block, max_vars_per_block);
    const Assignment pick = choose_block_optimum(solved.optima, instance, i);
    result.min_energy += solved.min_energy;
    for (std::size_t x = 0; x < instance.n; ++x) {
      result.assignment[(i - 1) * instance.n + x] = pick[x];
    }
  }
  return result;
}

SampleSet sample_sa(const QuboModel& model, std::size_t num_reads,
                    const AnnealSchedule& schedule, std::uint64_t seed) {
  if (num_reads < 1) throw DomainError("num_reads must be at least 1");
  if (!(schedule.final_temperature > 0.0) ||
      schedule.initial_temperature < schedule.final_temperature) {
    throw DomainError("schedule requires initial >= final > 0");
  }
  if (schedule.sweeps < 1) throw DomainError("schedule requires sweeps >= 1");

  const std::size_t nv = model.num_vars();
  const Adjacency adj = build_adjacency(model);
  const double ratio =
      schedule.sweeps > 1
          ? std::pow(schedule.final_temperature / schedule.initial_temperature,
                     1.0 / static_cast<double>(schedule.sweeps - 1))
          : 1.0;

  std::map<Assignment, std::size_t> counts;
  for (std::size_t read = 0; read < num_reads; ++read) {
    std::mt19937_64 rng(derive_stream_seed(seed, read));
    std::uint64_t mask = 0;
    for (std::size_t u = 0; u < nv; ++u) {
      mask |= (rng() & 1u) ? (std::uint64_t{1} << u) : 0;
    }
    double current = model.energy(assignment_from_mask(mask, nv));
    std::uint64_t best_mask = mask;
    double best = current;
    double temperature = schedule.initial_temperature;
    for (std::size_t sweep = 0; sweep < schedule.sweeps && nv > 0; ++sweep) {
      for (std::size_t step = 0; step < nv; ++step) {
        const std::size_t u = uniform_index(rng, nv);
        const double delta = flip_delta(adj, mask, u);
        if (delta <= 0.0 ||
            uniform01(rng) < std::exp(-delta / temperature)) {
          mask ^= std::uint64_t{1} << u;
          current += delta;
          if (current < best) {
            best = current;
            best_mask = mask;
          }
        }
      }
      temperature *= ratio;
    }
    ++counts[assignment_from_mask(best_mask, nv)];
  }

  SampleSet samples;
  samples.num_reads = num_reads;
  samples.records.reserve(counts.size());
  for (const auto& [bits, count] : counts) {
    samples.records.push_back(SampleRecord{bits, model.energy(bits), count});
  }
  std::sort(samples.records.begin(), samples.records.end(),
            [](const SampleRecord& lhs, const SampleRecord& rhs) {
              if (lhs.energy != rhs.energy) return lhs.energy < rhs.energy;
              return lhs.assignment < rhs.assignment;
            });
  return samples;
}

}  // namespace cspq
