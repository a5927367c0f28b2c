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

#ifndef CSPQ_DISTANCE_HPP_INCLUDED
#define CSPQ_DISTANCE_HPP_INCLUDED

#include <cstddef>
#include <cstdint>
#include <set>
#include <vector>

#include "cspq/core.hpp"

namespace cspq {

/// 0 when the symbols are equal, 1 otherwise.
inline int mismatch(Symbol c1, Symbol c2) { return c1 == c2 ? 0 : 1; }

/// Number of positions at which two equal-length strings differ.
/// Throws LengthMismatchError for unequal lengths.
std::size_t hamming_distance(const String& s1, const String& s2);

/// Sum of the candidate's Hamming distances to every string of the instance.
/// Throws LengthMismatchError unless candidate.size() == instance.m.
std::size_t sum_distance(const String& candidate, const CspInstance& instance);

/// Number of strings whose symbol at position i (1-based) differs from the
/// given symbol. Throws IndexError for i outside 1..m.
std::size_t column_distance(Symbol symbol, std::size_t i,
                            const CspInstance& instance);

/// The set of symbols appearing at one position across all strings.
struct PositionAlphabet {
  std::size_t i = 0;  ///< 1-based position
  std::set<Symbol> symbols;
};

/// Symbols of column i (1-based). Throws IndexError for i outside 1..m.
PositionAlphabet position_alphabet(std::size_t i, const CspInstance& instance);

/// A solved instance: per-position winner sets, the canonical closest string
/// (smallest code point among each position's winners), the max-distance
/// objective k and the distance sum it attains.
struct ClosestResult {
  std::vector<std::set<Symbol>> winners;  ///< winners[i-1] for position i
  String canonical;
  std::size_t k = 0;      ///< max over strings of d(canonical, s_x)
  std::size_t total = 0;  ///< sum over strings of d(canonical, s_x)
};

/// Exact solve by independent per-position minimization over each column's
/// symbols. Winner ties are reported in full; the canonical string takes the
/// smallest code point at each position.
ClosestResult closest_by_position(const CspInstance& instance);

/// Candidate enumeration domain for the brute-force oracle.
enum class SearchSpace {
  FullAlphabet,  ///< every position ranges over the whole instance alphabet
  PerPosition,   ///< position i ranges over its own column symbols
};

/// Exhaustive oracle: enumerates every candidate string in the chosen search
/// space in code-point-lexicographic order and keeps the first minimizer of
/// the distance sum. Throws SearchSpaceTooLargeError when the candidate count
/// exceeds the guard.
ClosestResult brute_force_closest(const CspInstance& instance,
                                  SearchSpace space,
                                  std::uint64_t guard = 10'000'000);

}  // namespace cspq

#endif  // CSPQ_DISTANCE_HPP_INCLUDED
