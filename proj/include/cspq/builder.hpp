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

#ifndef CSPQ_BUILDER_HPP_INCLUDED
#define CSPQ_BUILDER_HPP_INCLUDED

#include <functional>

#include "cspq/core.hpp"

namespace cspq {

/// Which objective the combined Hamiltonian carries.
enum class HamiltonianVariant {
  Standard,  ///< per-variable weight counts exact symbol mismatches
  Numeric,   ///< per-variable weight uses squared numeric symbol differences
};

/// Objective flavor plus, for the numeric flavor, the injective symbol-to-
/// real mapping. The default mapping is the Unicode scalar value (ASCII
/// compatible).
struct HamiltonianKind {
  HamiltonianVariant variant = HamiltonianVariant::Standard;
  std::function<double(Symbol)> bijection;

  static HamiltonianKind standard() { return {}; }
  static HamiltonianKind numeric();
  static HamiltonianKind numeric(std::function<double(Symbol)> map);
};

/// Constraint and objective weights. Both must be positive; the advisor
/// recommends constraint_weight > objective_weight.
struct PenaltyParams {
  double constraint_weight = 2.0;  ///< A, scales the one-hot penalty
  double objective_weight = 1.0;   ///< B, scales the distance objective
};

/// Pair weight of the numeric objective: d^2 / (d^2 + 1) for the difference
/// d of the two mapped symbol values. Lies in [0, 1).
double numeric_pair_weight(double mapped1, double mapped2);

/// One-hot penalty over all n*m variables: constant A*m*n, linear -A on each
/// variable, +A on every within-position pair. No cross-position terms.
QuboModel build_penalty(const CspInstance& instance, double constraint_weight);

/// Mismatch-count objective: linear B * column_distance(symbol of (x,i), i)
/// on each variable; no quadratic terms.
QuboModel build_objective_standard(const CspInstance& instance,
                                   double objective_weight);

/// Numeric objective: linear B * sum over strings of the numeric pair weight.
/// Throws NonInjectiveBijectionError when the mapping collides on the
/// instance alphabet.
QuboModel build_objective_numeric(const CspInstance& instance,
                                  double objective_weight,
                                  const std::function<double(Symbol)>& map);

/// Penalty plus the chosen objective (offsets add).
QuboModel build_hamiltonian(const CspInstance& instance,
                            const PenaltyParams& params,
                            const HamiltonianKind& kind);

/// The n-variable sub-model of one position i (1-based). Sub-model energies
/// over the position blocks of an assignment sum to the full-model energy;
/// each block carries offset A*n. Throws IndexError for i outside 1..m.
QuboModel build_per_position(const CspInstance& instance,
                             const PenaltyParams& params,
                             const HamiltonianKind& kind, std::size_t i);

/// Free-function form of QuboModel::energy.
inline double energy(const QuboModel& model, const Assignment& assignment) {
  return model.energy(assignment);
}

/// Free-function form of IsingModel::energy.
inline double energy(const IsingModel& model,
                     const std::vector<std::int8_t>& spins) {
  return model.energy(spins);
}

/// Evaluates the combined Hamiltonian directly from its term definitions,
/// without building a QuboModel. Serves as an independent cross-check of
/// energy(build_hamiltonian(...), assignment).
double hamiltonian_energy_direct(const CspInstance& instance,
                                 const PenaltyParams& params,
                                 const HamiltonianKind& kind,
                                 const Assignment& assignment);

}  // namespace cspq

#endif  // CSPQ_BUILDER_HPP_INCLUDED
