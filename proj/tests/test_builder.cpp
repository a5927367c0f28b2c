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

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"

#include "cspq/analysis.hpp"
#include "cspq/builder.hpp"
#include "cspq/distance.hpp"
#include "cspq/errors.hpp"
#include "cspq/sampler.hpp"
#include "test_support.hpp"

using namespace cspq;
using namespace cspq::testing;

namespace {

bool same_position(const QuboModel::PairKey& key, std::size_t n) {
  return var_at(key.first, n).i == var_at(key.second, n).i;
}

}  // namespace

TEST_CASE("build_penalty expands the one-hot penalty") {
  const CspInstance instance = set1();
  const QuboModel model = build_penalty(instance, 2.0);
  CHECK(model.num_vars() == 9);
  CHECK(model.offset() == 18.0);
  REQUIRE(model.linear_terms().size() == 9);
  for (const auto& [u, c] : model.linear_terms()) {
    (void)u;
    CHECK(c == -2.0);
  }
  REQUIRE(model.quadratic_terms().size() == 9);
  for (const auto& [key, c] : model.quadratic_terms()) {
    CHECK(c == 2.0);
    CHECK(same_position(key, instance.n));
  }
}

TEST_CASE("penalty energies at the trivial assignments") {
  for (const CspInstance& instance : paper_sets()) {
    const double a = 2.0;
    const QuboModel model = build_penalty(instance, a);
    const std::size_t nv = instance.n * instance.m;
    CHECK(model.energy(Assignment(nv, 0)) ==
          a * static_cast<double>(instance.m * instance.n));
    const double all_ones = a * static_cast<double>(instance.m) *
                            static_cast<double>(instance.n) *
                            static_cast<double>(instance.n - 1) / 2.0;
    CHECK(model.energy(Assignment(nv, 1)) == all_ones);
  }
}

TEST_CASE("build_objective_standard carries column mismatch counts") {
  const QuboModel first = build_objective_standard(set1(), 1.0);
  CHECK(first.linear(0) == 1.0);
  CHECK(first.linear(1) == 1.0);
  CHECK(first.linear(2) == 2.0);
  CHECK(first.quadratic_terms().empty());
  CHECK(first.offset() == 0.0);

  const QuboModel second = build_objective_standard(set2(), 1.0);
  const std::vector<double> expected{3, 3, 2, 2, 2};
  for (std::size_t x = 0; x < 5; ++x) CHECK(second.linear(x) == expected[x]);

  const CspInstance single =
      validate_instance(std::vector<std::string>{"abc"});
  CHECK(build_objective_standard(single, 1.0).linear_terms().empty());
}

TEST_CASE("numeric pair weights and coefficients") {
  CHECK(numeric_pair_weight(97.0, 97.0) == 0.0);
  CHECK(numeric_pair_weight(97.0, 100.0) == doctest::Approx(0.9).epsilon(1e-12));

  const QuboModel model =
      build_objective_numeric(set1(), 1.0, [](Symbol c) {
        return static_cast<double>(c);
      });
  CHECK(model.linear(2) == doctest::Approx(1.8).epsilon(1e-12));
  for (const auto& [u, c] : model.linear_terms()) {
    (void)u;
    CHECK(c >= 0.0);
    CHECK(c < static_cast<double>(set1().n));  // each pair weight is below 1
  }

  CHECK_THROWS_AS(
      build_objective_numeric(set1(), 1.0, [](Symbol) { return 7.0; }),
      NonInjectiveBijectionError);
}

TEST_CASE("build_hamiltonian sums penalty and objective") {
  const CspInstance instance = set1();
  const PenaltyParams params{2.0, 1.0};
  const QuboModel model =
      build_hamiltonian(instance, params, HamiltonianKind::standard());
  CHECK(model.offset() == 18.0);
  // First position block: linear (-1, -1, 0), every pair +2.
  CHECK(model.linear(0) == -1.0);
  CHECK(model.linear(1) == -1.0);
  CHECK(model.linear(2) == 0.0);
  CHECK(model.quadratic(0, 1) == 2.0);
  CHECK(model.quadratic(0, 2) == 2.0);
  CHECK(model.quadratic(1, 2) == 2.0);
}

TEST_CASE("per-position blocks reproduce the stated coefficients") {
  const QuboModel block4 = build_per_position(
      set4(), PenaltyParams{4.0, 1.0}, HamiltonianKind::standard(), 1);
  CHECK(block4.num_vars() == 5);

  const QuboModel block3 = build_per_position(
      set3(), PenaltyParams{5.0, 1.0}, HamiltonianKind::standard(), 2);
  const std::vector<double> expected{4 - 5, 4 - 5, 3 - 5, 3 - 5, 3 - 5, 5 - 5};
  for (std::size_t x = 0; x < 6; ++x) {
    CHECK(block3.linear(x) == expected[x]);
  }
  CHECK(block3.offset() == 5.0 * 6.0);

  CHECK_THROWS_AS(build_per_position(set1(), PenaltyParams{2.0, 1.0},
                                     HamiltonianKind::standard(), 4),
                  IndexError);
}

TEST_CASE("a position block's ground state matches direct enumeration") {
  const QuboModel block = build_per_position(
      set1(), PenaltyParams{2.0, 1.0}, HamiltonianKind::standard(), 1);
  const ExhaustiveResult solved = solve_exhaustive(block);
  CHECK(solved.min_energy == 5.0);
  REQUIRE(solved.optima.size() == 2);
  CHECK(solved.optima[0] == Assignment{0, 1, 0});
  CHECK(solved.optima[1] == Assignment{1, 0, 0});
}

TEST_CASE("block minima sum to the full-model minimum") {
  const CspInstance instance = set1();
  const PenaltyParams params{2.0, 1.0};
  const HamiltonianKind kind = HamiltonianKind::standard();
  double block_total = 0.0;
  for (std::size_t i = 1; i <= instance.m; ++i) {
    block_total +=
        solve_exhaustive(build_per_position(instance, params, kind, i))
            .min_energy;
  }
  const double full =
      solve_exhaustive(build_hamiltonian(instance, params, kind)).min_energy;
  CHECK(block_total == doctest::Approx(full).epsilon(1e-12));
  CHECK(full == 15.0);
}

TEST_CASE("energy values frozen for set #1") {
  const CspInstance instance = set1();
  const PenaltyParams params{2.0, 1.0};
  const HamiltonianKind kind = HamiltonianKind::standard();
  const QuboModel model = build_hamiltonian(instance, params, kind);
  const std::size_t nv = instance.n * instance.m;

  CHECK(model.energy(Assignment(nv, 0)) == 18.0);

  // All-ones: offset 18, linear sum -18 + 12, quadratic 18. The independent
  // evaluator fixes the value.
  const Assignment ones(nv, 1);
  CHECK(hamiltonian_energy_direct(instance, params, kind, ones) == 30.0);
  CHECK(model.energy(ones) == 30.0);

  const Assignment aaa = one_hot(instance, {1, 1, 1});
  CHECK(model.energy(aaa) == 15.0);  // A*m*(n-1) + B*D("aaa") = 12 + 3
}

TEST_CASE("direct evaluator agrees with built models everywhere") {
  std::mt19937_64 rng(4242);
  for (const CspInstance& instance : paper_sets()) {
    for (const HamiltonianKind& kind :
         {HamiltonianKind::standard(), HamiltonianKind::numeric()}) {
      const PenaltyParams params{3.0, 1.0};
      const QuboModel model = build_hamiltonian(instance, params, kind);
      for (int trial = 0; trial < 200; ++trial) {
        const Assignment bits =
            random_assignment(rng, instance.n * instance.m);
        CHECK(model.energy(bits) ==
              doctest::Approx(
                  hamiltonian_energy_direct(instance, params, kind, bits))
                  .epsilon(1e-9));
      }
      CHECK(hamiltonian_energy_direct(instance, params, kind,
                                      Assignment(instance.n * instance.m,
                                                 0)) ==
            params.constraint_weight * static_cast<double>(instance.m) *
                static_cast<double>(instance.n));
    }
  }
}

TEST_CASE("valid one-hot assignments satisfy the energy identity") {
  // Standard kind: energy = A*m*(n-1) + B*D(decoded string).
  for (const CspInstance& instance : {set1(), set2(), set3()}) {
    const PenaltyParams params{5.0, 1.0};
    const QuboModel model =
        build_hamiltonian(instance, params, HamiltonianKind::standard());
    const double base = params.constraint_weight *
                        static_cast<double>(instance.m) *
                        static_cast<double>(instance.n - 1);
    for_each_one_hot(instance, [&](const Assignment& bits) {
      const DecodedOutcome outcome = decode(bits, instance);
      REQUIRE(outcome.is_valid);
      const double expected =
          base + params.objective_weight *
                     static_cast<double>(sum_distance(outcome.value,
                                                      instance));
      CHECK(model.energy(bits) == doctest::Approx(expected).epsilon(1e-9));
    });
  }
}

TEST_CASE("valid one-hot assignments satisfy the numeric energy identity") {
  const CspInstance instance = set2();
  const PenaltyParams params{3.0, 1.0};
  const HamiltonianKind kind = HamiltonianKind::numeric();
  const QuboModel model = build_hamiltonian(instance, params, kind);
  const double base = params.constraint_weight *
                      static_cast<double>(instance.m) *
                      static_cast<double>(instance.n - 1);
  for_each_one_hot(instance, [&](const Assignment& bits) {
    const DecodedOutcome outcome = decode(bits, instance);
    REQUIRE(outcome.is_valid);
    double objective = 0.0;
    for (std::size_t i = 1; i <= instance.m; ++i) {
      for (std::size_t y = 1; y <= instance.n; ++y) {
        objective += numeric_pair_weight(
            static_cast<double>(outcome.value[i - 1]),
            static_cast<double>(instance.symbol(y, i)));
      }
    }
    CHECK(model.energy(bits) ==
          doctest::Approx(base + params.objective_weight * objective)
              .epsilon(1e-9));
  });
}

TEST_CASE("no built model couples variables across positions") {
  for (const CspInstance& instance : paper_sets()) {
    for (const HamiltonianKind& kind :
         {HamiltonianKind::standard(), HamiltonianKind::numeric()}) {
      const QuboModel model =
          build_hamiltonian(instance, PenaltyParams{4.0, 1.0}, kind);
      for (const auto& [key, c] : model.quadratic_terms()) {
        (void)c;
        CHECK(same_position(key, instance.n));
      }
    }
  }
}

TEST_CASE("standard objective coefficients are nonnegative B multiples") {
  const double b = 2.0;
  for (const CspInstance& instance : paper_sets()) {
    const QuboModel model = build_objective_standard(instance, b);
    for (const auto& [u, c] : model.linear_terms()) {
      (void)u;
      CHECK(c >= 0.0);
      const double multiple = c / b;
      CHECK(multiple == std::round(multiple));
    }
  }
}

TEST_CASE("permuting input strings leaves ground-state strings unchanged") {
  const PenaltyParams params{5.0, 1.0};
  const HamiltonianKind kind = HamiltonianKind::standard();
  std::vector<std::string> strings{"aaa", "aaa", "ded", "ded", "ded", "ddd"};

  auto decoded_ground_states = [&](const CspInstance& instance) {
    const ExhaustiveResult solved =
        solve_exhaustive(build_hamiltonian(instance, params, kind));
    std::multiset<String> decoded;
    for (const Assignment& bits : solved.optima) {
      const DecodedOutcome outcome = decode(bits, instance);
      REQUIRE(outcome.is_valid);
      decoded.insert(outcome.value);
    }
    return decoded;
  };

  const auto baseline = decoded_ground_states(validate_instance(strings));
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 3; ++trial) {
    std::shuffle(strings.begin(), strings.end(), rng);
    CHECK(decoded_ground_states(validate_instance(strings)) == baseline);
  }
}
