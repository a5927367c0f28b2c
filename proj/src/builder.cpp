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

#include "cspq/builder.hpp"

#include <map>
#include <string>
#include <utility>

#include "cspq/distance.hpp"
#include "cspq/errors.hpp"
#include "cspq/unicode.hpp"

namespace cspq {

namespace {

double code_point_value(Symbol c) { return static_cast<double>(c); }

void require_positive(const PenaltyParams& params) {
  if (!(params.constraint_weight > 0.0) || !(params.objective_weight > 0.0)) {
    throw DomainError("penalty parameters must be positive");
  }
}

void check_injective(const CspInstance& instance,
                     const std::function<double(Symbol)>& map) {
  std::map<double, Symbol> seen;
  for (Symbol c : instance.alphabet) {
    const auto [it, inserted] = seen.emplace(map(c), c);
    if (!inserted) {
      throw NonInjectiveBijectionError(
          "symbol mapping collides on '" + encode_utf8(c) + "' and '" +
          encode_utf8(it->second) + "'");
    }
  }
}

/// Objective weight of selecting (x, i): the row's summed mismatch against
/// every string's symbol in the same column, under either flavor.
double row_weight(const CspInstance& instance, const HamiltonianKind& kind,
                  std::size_t x, std::size_t i) {
  const Symbol chosen = instance.symbol(x, i);
  if (kind.variant == HamiltonianVariant::Standard) {
    return static_cast<double>(column_distance(chosen, i, instance));
  }
  double total = 0.0;
  for (std::size_t y = 1; y <= instance.n; ++y) {
    total += numeric_pair_weight(kind.bijection(chosen),
                                 kind.bijection(instance.symbol(y, i)));
  }
  return total;
}

}  // namespace

HamiltonianKind HamiltonianKind::numeric() {
  return numeric(code_point_value);
}

HamiltonianKind HamiltonianKind::numeric(std::function<double(Symbol)> map) {
  HamiltonianKind kind;
  kind.variant = HamiltonianVariant::Numeric;
  kind.bijection = std::move(map);
  return kind;
}

double numeric_pair_weight(double mapped1, double mapped2) {
  const double d = mapped1 - mapped2;
  return d * d / (d * d + 1.0);
}

QuboModel build_penalty(const CspInstance& instance,
                        double constraint_weight) {
  if (!(constraint_weight > 0.0)) {
    throw DomainError("constraint weight must be positive");
  }
  const double a = constraint_weight;
  QuboModel model(instance.n * instance.m);
  model.add_offset(a * static_cast<double>(instance.m * instance.n));
  for (std::size_t i = 1; i <= instance.m; ++i) {
    for (std::size_t x = 1; x <= instance.n; ++x) {
      model.add_linear(flat_index(x, i, instance.n), -a);
      for (std::size_t y = x + 1; y <= instance.n; ++y) {
        model.add_quadratic(flat_index(x, i, instance.n),
                            flat_index(y, i, instance.n), a);
      }
    }
  }
  return model;
}

QuboModel build_objective_standard(const CspInstance& instance,
                                   double objective_weight) {
  if (!(objective_weight > 0.0)) {
    throw DomainError("objective weight must be positive");
  }
  QuboModel model(instance.n * instance.m);
  const HamiltonianKind kind = HamiltonianKind::standard();
  for (std::size_t i = 1; i <= instance.m; ++i) {
    for (std::size_t x = 1; x <= instance.n; ++x) {
      model.add_linear(flat_index(x, i, instance.n),
                       objective_weight * row_weight(instance, kind, x, i));
    }
  }
  return model;
}

QuboModel build_objective_numeric(const CspInstance& instance,
                                  double objective_weight,
                                  const std::function<double(Symbol)>& map) {
  if (!(objective_weight > 0.0)) {
    throw DomainError("objective weight must be positive");
  }
  check_injective(instance, map);
  QuboModel model(instance.n * instance.m);
  const HamiltonianKind kind = HamiltonianKind::numeric(map);
  for (std::size_t i = 1; i <= instance.m; ++i) {
    for (std::size_t x = 1; x <= instance.n; ++x) {
      model.add_linear(flat_index(x, i, instance.n),
                       objective_weight * row_weight(instance, kind, x, i));
    }
  }
  return model;
}

QuboModel build_hamiltonian(const CspInstance& instance,
                            const PenaltyParams& params,
                            const HamiltonianKind& kind) {
  require_positive(params);
  QuboModel model = build_penalty(instance, params.constraint_weight);
  if (kind.variant == HamiltonianVariant::Standard) {
    model.add(build_objective_standard(instance, params.objective_weight));
  } else {
    model.add(build_objective_numeric(instance, params.objective_weight,
                                      kind.bijection));
  }
  return model;
}

QuboModel build_per_position(const CspInstance& instance,
                             const PenaltyParams& params,
                             const HamiltonianKind& kind, std::size_t i) {
  require_positive(params);
  if (i < 1 || i > instance.m) {
    throw IndexError("position index " + std::to_string(i) + " outside 1.." +
                     std::to_string(instance.m));
  }
  if (kind.variant == HamiltonianVariant::Numeric) {
    check_injective(instance, kind.bijection);
  }
  const double a = params.constraint_weight;
  QuboModel block(instance.n);
  block.add_offset(a * static_cast<double>(instance.n));
  for (std::size_t x = 1; x <= instance.n; ++x) {
    block.add_linear(x - 1, -a + params.objective_weight *
                                     row_weight(instance, kind, x, i));
    for (std::size_t y = x + 1; y <= instance.n; ++y) {
      block.add_quadratic(x - 1, y - 1, a);
    }
  }
  return block;
}

double hamiltonian_energy_direct(const CspInstance& instance,
                                 const PenaltyParams& params,
                                 const HamiltonianKind& kind,
                                 const Assignment& assignment) {
  require_positive(params);
  if (assignment.size() != instance.n * instance.m) {
    throw LengthMismatchError("assignment has " +
                              std::to_string(assignment.size()) +
                              " bits, instance needs " +
                              std::to_string(instance.n * instance.m));
  }
  const double a = params.constraint_weight;
  const double b = params.objective_weight;
  double penalty = 0.0;
  double objective = 0.0;
  for (std::size_t i = 1; i <= instance.m; ++i) {
    for (std::size_t x = 1; x <= instance.n; ++x) {
      const bool active = assignment[flat_index(x, i, instance.n)] != 0;
      penalty += a * (active ? 0.0 : 1.0);
      if (!active) continue;
      objective += b * row_weight(instance, kind, x, i);
      for (std::size_t y = x + 1; y <= instance.n; ++y) {
        if (assignment[flat_index(y, i, instance.n)]) penalty += a;
      }
    }
  }
  return penalty + objective;
}

}  // namespace cspq
