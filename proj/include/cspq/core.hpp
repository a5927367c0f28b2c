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

#ifndef CSPQ_CORE_HPP_INCLUDED
#define CSPQ_CORE_HPP_INCLUDED

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace cspq {

/// A single Unicode scalar value.
using Symbol = char32_t;

/// A string of Unicode scalar values.
using String = std::u32string;

/// A binary vector over the n*m selector variables.
using Assignment = std::vector<std::uint8_t>;

/// A closest-string problem instance: n strings of identical length m over
/// the alphabet formed by the union of their symbols. Immutable once built;
/// construct through validate_instance().
struct CspInstance {
  std::vector<String> strings;
  std::size_t n = 0;        ///< number of strings
  std::size_t m = 0;        ///< common string length
  std::set<Symbol> alphabet;

  /// Symbol of string x (1-based) at position i (1-based).
  Symbol symbol(std::size_t x, std::size_t i) const {
    return strings[x - 1][i - 1];
  }
};

/// Checks the raw strings and assembles an instance.
/// Throws EmptySetError, ZeroLengthError or LengthMismatchError.
CspInstance validate_instance(const std::vector<String>& raw);

/// Convenience overload taking UTF-8 encoded strings.
CspInstance validate_instance(const std::vector<std::string>& raw_utf8);

/// Identity of one selector variable: string x (1..n) at position i (1..m).
struct VarIndex {
  std::size_t x = 0;
  std::size_t i = 0;

  friend bool operator==(const VarIndex&, const VarIndex&) = default;
};

/// Flat variable index for (x, i): (i-1)*n + (x-1). Position-major, so each
/// position occupies a contiguous block of n indices.
/// Throws IndexError for x outside 1..n or i < 1.
std::size_t flat_index(std::size_t x, std::size_t i, std::size_t n);

/// Same, but also range-checks i against the instance length.
std::size_t flat_index(const CspInstance& instance, std::size_t x,
                       std::size_t i);

/// Inverse of flat_index. Throws IndexError when n is zero.
VarIndex var_at(std::size_t flat, std::size_t n);

/// Quadratic model over binary variables: offset + sum of linear terms plus
/// strictly upper-triangular quadratic terms. Zero coefficients are never
/// stored; accumulating a term to exactly zero removes its entry.
class QuboModel {
 public:
  using PairKey = std::pair<std::size_t, std::size_t>;

  QuboModel() = default;
  explicit QuboModel(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }

  double offset() const { return offset_; }
  void add_offset(double value) { offset_ += value; }

  /// Accumulates a linear coefficient onto variable u.
  void add_linear(std::size_t u, double coefficient);

  /// Accumulates a quadratic coefficient onto the pair {u, v}. The order of
  /// u and v does not matter; u == v is rejected with IndexError.
  void add_quadratic(std::size_t u, std::size_t v, double coefficient);

  /// Element-wise sum with another model of the same size (offsets add).
  void add(const QuboModel& other);

  double linear(std::size_t u) const;
  double quadratic(std::size_t u, std::size_t v) const;

  const std::map<std::size_t, double>& linear_terms() const { return linear_; }
  const std::map<PairKey, double>& quadratic_terms() const {
    return quadratic_;
  }

  /// offset + sum(linear over set bits) + sum(quadratic over set pairs).
  /// Throws LengthMismatchError unless assignment.size() == num_vars().
  double energy(const Assignment& assignment) const;

  /// Largest absolute linear or quadratic coefficient (0 for constant models).
  double max_abs_coefficient() const;

 private:
  std::size_t num_vars_ = 0;
  std::map<std::size_t, double> linear_;
  std::map<PairKey, double> quadratic_;
  double offset_ = 0.0;
};

/// Spin-valued counterpart of QuboModel: fields h, couplings J (strictly
/// upper-triangular), and a constant offset. Spins take values -1/+1.
class IsingModel {
 public:
  using PairKey = std::pair<std::size_t, std::size_t>;

  IsingModel() = default;
  explicit IsingModel(std::size_t num_vars) : num_vars_(num_vars) {}

  std::size_t num_vars() const { return num_vars_; }

  double offset() const { return offset_; }
  void add_offset(double value) { offset_ += value; }

  void add_field(std::size_t u, double coefficient);
  void add_coupling(std::size_t u, std::size_t v, double coefficient);

  const std::map<std::size_t, double>& fields() const { return h_; }
  const std::map<PairKey, double>& couplings() const { return j_; }

  /// Energy of a -1/+1 spin configuration.
  double energy(const std::vector<std::int8_t>& spins) const;

 private:
  std::size_t num_vars_ = 0;
  std::map<std::size_t, double> h_;
  std::map<PairKey, double> j_;
  double offset_ = 0.0;
};

/// Rewrites a QUBO in spin variables via x = (s + 1) / 2. Energies agree on
/// corresponding assignments; constant parts land in the Ising offset.
IsingModel to_ising(const QuboModel& model);

/// Spin configuration corresponding to a binary assignment (0 -> -1, 1 -> +1).
std::vector<std::int8_t> spins_from_assignment(const Assignment& assignment);

}  // namespace cspq

#endif  // CSPQ_CORE_HPP_INCLUDED
