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

#include "cspq/distance.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "cspq/errors.hpp"

namespace cspq {

std::size_t hamming_distance(const String& s1, const String& s2) {
  if (s1.size() != s2.size()) {
    throw LengthMismatchError("hamming_distance requires equal lengths (" +
                              std::to_string(s1.size()) + " vs " +
                              std::to_string(s2.size()) + ")");
  }
  std::size_t count = 0;
  for (std::size_t i = 0; i < s1.size(); ++i) count += mismatch(s1[i], s2[i]);
  return count;
}

std::size_t sum_distance(const String& candidate,
                         const CspInstance& instance) {
  if (candidate.size() != instance.m) {
    throw LengthMismatchError("candidate has length " +
                              std::to_string(candidate.size()) +
                              ", instance strings have length " +
                              std::to_string(instance.m));
  }
  std::size_t total = 0;
  for (const String& s : instance.strings)
    total += hamming_distance(candidate, s);
  return total;
}

std::size_t column_distance(Symbol symbol, std::size_t i,
                            const CspInstance& instance) {
  if (i < 1 || i > instance.m) {
    throw IndexError("position index " + std::to_string(i) + " outside 1.." +
                     std::to_string(instance.m));
  }
  std::size_t count = 0;
  for (const String& s : instance.strings) count += mismatch(symbol, s[i - 1]);
  return count;
}

PositionAlphabet position_alphabet(std::size_t i,
                                   const CspInstance& instance) {
  if (i < 1 || i > instance.m) {
    throw IndexError("position index " + std::to_string(i) + " outside 1.." +
                     std::to_string(instance.m));
  }
  PositionAlphabet result;
  result.i = i;
  for (const String& s : instance.strings) result.symbols.insert(s[i - 1]);
  return result;
}

namespace {

ClosestResult finish_result(ClosestResult result,
                            const CspInstance& instance) {
  result.total = sum_distance(result.canonical, instance);
  result.k = 0;
  for (const String& s : instance.strings) {
    result.k = std::max(result.k, hamming_distance(result.canonical, s));
  }
  return result;
}

std::vector<std::set<Symbol>> winner_sets(const CspInstance& instance) {
  std::vector<std::set<Symbol>> winners(instance.m);
  for (std::size_t i = 1; i <= instance.m; ++i) {
    const PositionAlphabet column = position_alphabet(i, instance);
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Symbol c : column.symbols) {
      const std::size_t d = column_distance(c, i, instance);
      if (d < best) {
        best = d;
        winners[i - 1].clear();
      }
      if (d == best) winners[i - 1].insert(c);
    }
  }
  return winners;
}

}  // namespace

ClosestResult closest_by_position(const CspInstance& instance) {
  ClosestResult result;
  result.winners = winner_sets(instance);
  for (const std::set<Symbol>& set : result.winners) {
    result.canonical.push_back(*set.begin());
  }
  return finish_result(std::move(result), instance);
}

ClosestResult brute_force_closest(const CspInstance& instance,
                                  SearchSpace space, std::uint64_t guard) {
  // Per-position candidate symbol lists, ascending by code point so the
  // enumeration below runs in lexicographic order.
  std::vector<std::vector<Symbol>> choices(instance.m);
  for (std::size_t i = 1; i <= instance.m; ++i) {
    const std::set<Symbol>& pool =
        space == SearchSpace::FullAlphabet
            ? instance.alphabet
            : position_alphabet(i, instance).symbols;
    choices[i - 1].assign(pool.begin(), pool.end());
  }

  std::uint64_t candidates = 1;
  for (const auto& pool : choices) {
    if (candidates > guard / pool.size()) {
      throw SearchSpaceTooLargeError(
          "candidate count exceeds guard of " + std::to_string(guard));
    }
    candidates *= pool.size();
  }

  std::vector<std::size_t> odometer(instance.m, 0);
  String candidate;
  for (std::size_t i = 0; i < instance.m; ++i)
    candidate.push_back(choices[i][0]);

  std::size_t best = std::numeric_limits<std::size_t>::max();
  String best_candidate;
  for (std::uint64_t step = 0; step < candidates; ++step) {
    const std::size_t d = sum_distance(candidate, instance);
    if (d < best) {
      best = d;
      best_candidate = candidate;
    }
    // Advance the rightmost position first; leftmost is most significant.
    std::size_t pos = instance.m;
    while (pos > 0) {
      --pos;
      if (++odometer[pos] < choices[pos].size()) {
        candidate[pos] = choices[pos][odometer[pos]];
        break;
      }
      odometer[pos] = 0;
      candidate[pos] = choices[pos][0];
    }
  }

  ClosestResult result;
  result.winners = winner_sets(instance);
  result.canonical = std::move(best_candidate);
  return finish_result(std::move(result), instance);
}

}  // namespace cspq
