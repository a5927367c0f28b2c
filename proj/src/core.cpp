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

#include "cspq/core.hpp"

#include <cmath>
#include <string>

#include "cspq/errors.hpp"
#include "cspq/unicode.hpp"

namespace cspq {

CspInstance validate_instance(const std::vector<String>& raw) {
  if (raw.empty()) throw EmptySetError("instance contains no strings");
  const std::size_t m = raw.front().size();
  if (m == 0) throw ZeroLengthError("strings must have length at least 1");
  CspInstance instance;
  instance.strings = raw;
  instance.n = raw.size();
  instance.m = m;
  for (std::size_t x = 0; x < raw.size(); ++x) {
    if (raw[x].size() != m) {
      throw LengthMismatchError(
          "string " + std::to_string(x + 1) + " has length " +
          std::to_string(raw[x].size()) + ", expected " + std::to_string(m));
    }
    for (Symbol c : raw[x]) instance.alphabet.insert(c);
  }
  return instance;
}

CspInstance validate_instance(const std::vector<std::string>& raw_utf8) {
  std::vector<String> decoded;
  decoded.reserve(raw_utf8.size());
  for (const std::string& s : raw_utf8) decoded.push_back(decode_utf8(s));
  return validate_instance(decoded);
}

std::size_t flat_index(std::size_t x, std::size_t i, std::size_t n) {
  if (x < 1 || x > n) {
    throw IndexError("string index " + std::to_string(x) + " outside 1.." +
                     std::to_string(n));
  }
  if (i < 1) throw IndexError("position index must be at least 1");
  return (i - 1) * n + (x - 1);
}

std::size_t flat_index(const CspInstance& instance, std::size_t x,
                       std::size_t i) {
  if (i < 1 || i > instance.m) {
    throw IndexError("position index " + std::to_string(i) + " outside 1.." +
                     std::to_string(instance.m));
  }
  return flat_index(x, i, instance.n);
}

VarIndex var_at(std::size_t flat, std::size_t n) {
  if (n == 0) throw IndexError("var_at requires n >= 1");
  return VarIndex{flat % n + 1, flat / n + 1};
}

void QuboModel::add_linear(std::size_t u, double coefficient) {
  if (u >= num_vars_) {
    throw IndexError("variable " + std::to_string(u) + " outside model of " +
                     std::to_string(num_vars_) + " variables");
  }
  const double value = (linear_[u] += coefficient);
  if (value == 0.0) linear_.erase(u);
}

void QuboModel::add_quadratic(std::size_t u, std::size_t v,
                              double coefficient) {
  if (u >= num_vars_ || v >= num_vars_) {
    throw IndexError("pair {" + std::to_string(u) + ", " + std::to_string(v) +
                     "} outside model of " + std::to_string(num_vars_) +
                     " variables");
  }
  if (u == v) throw IndexError("quadratic term requires two distinct variables");
  const PairKey key = u < v ? PairKey{u, v} : PairKey{v, u};
  const double value = (quadratic_[key] += coefficient);
  if (value == 0.0) quadratic_.erase(key);
}

void QuboModel::add(const QuboModel& other) {
  if (other.num_vars_ != num_vars_) {
    throw LengthMismatchError("cannot add models of different sizes");
  }
  offset_ += other.offset_;
  for (const auto& [u, c] : other.linear_) add_linear(u, c);
  for (const auto& [key, c] : other.quadratic_)
    add_quadratic(key.first, key.second, c);
}

double QuboModel::linear(std::size_t u) const {
  const auto it = linear_.find(u);
  return it == linear_.end() ? 0.0 : it->second;
}

double QuboModel::quadratic(std::size_t u, std::size_t v) const {
  const PairKey key = u < v ? PairKey{u, v} : PairKey{v, u};
  const auto it = quadratic_.find(key);
  return it == quadratic_.end() ? 0.0 : it->second;
}

double QuboModel::energy(const Assignment& assignment) const {
  if (assignment.size() != num_vars_) {
    throw LengthMismatchError("assignment has " +
                              std::to_string(assignment.size()) +
                              " bits, model has " + std::to_string(num_vars_) +
                              " variables");
  }
  double total = offset_;
  for (const auto& [u, c] : linear_) {
    if (assignment[u]) total += c;
  }
  for (const auto& [key, c] : quadratic_) {
    if (assignment[key.first] && assignment[key.second]) total += c;
  }
  return total;
}

double QuboModel::max_abs_coefficient() const {
  double largest = 0.0;
  for (const auto& [u, c] : linear_) {
    (void)u;
    if (std::abs(c) > largest) largest = std::abs(c);
  }
  for (const auto& [key, c] : quadratic_) {
    (void)key;
    if (std::abs(c) > largest) largest = std::abs(c);
  }
  return largest;
}

void IsingModel::add_field(std::size_t u, double coefficient) {
  if (u >= num_vars_) {
    throw IndexError("spin " + std::to_string(u) + " outside model of " +
                     std::to_string(num_vars_) + " spins");
  }
  const double value = (h_[u] += coefficient);
  if (value == 0.0) h_.erase(u);
}

void IsingModel::add_coupling(std::size_t u, std::size_t v,
                              double coefficient) {
  if (u >= num_vars_ || v >= num_vars_) {
    throw IndexError("coupling outside model of " + std::to_string(num_vars_) +
                     " spins");
  }
  if (u == v) throw IndexError("coupling requires two distinct spins");
  const PairKey key = u < v ? PairKey{u, v} : PairKey{v, u};
  const double value = (j_[key] += coefficient);
  if (value == 0.0) j_.erase(key);
}

double IsingModel::energy(const std::vector<std::int8_t>& spins) const {
  if (spins.size() != num_vars_) {
    throw LengthMismatchError("spin vector has " +
                              std::to_string(spins.size()) +
                              " entries, model has " +
                              std::to_string(num_vars_) + " spins");
  }
  double total = offset_;
  for (const auto& [u, c] : h_) total += c * spins[u];
  for (const auto& [key, c] : j_)
    total += c * spins[key.first] * spins[key.second];
  return total;
}

IsingModel to_ising(const QuboModel& model) {
  IsingModel ising(model.num_vars());
  ising.add_offset(model.offset());
  // x = (s + 1)/2: a linear term c*x becomes c/2*s + c/2, a quadratic term
  // c*x_u*x_v becomes c/4*(s_u*s_v + s_u + s_v + 1).
  for (const auto& [u, c] : model.linear_terms()) {
    ising.add_field(u, c / 2.0);
    ising.add_offset(c / 2.0);
  }
  for (const auto& [key, c] : model.quadratic_terms()) {
    ising.add_coupling(key.first, key.second, c / 4.0);
    ising.add_field(key.first, c / 4.0);
    ising.add_field(key.second, c / 4.0);
    ising.add_offset(c / 4.0);
  }
  return ising;
}

std::vector<std::int8_t> spins_from_assignment(const Assignment& assignment) {
  std::vector<std::int8_t> spins(assignment.size());
  for (std::size_t u = 0; u < assignment.size(); ++u) {
    spins[u] = assignment[u] ? 1 : -1;
  }
  return spins;
}

}  // namespace cspq
