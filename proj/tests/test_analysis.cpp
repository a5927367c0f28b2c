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

#include <vector>

#include "doctest.h"

#include "cspq/analysis.hpp"
#include "cspq/builder.hpp"
#include "cspq/errors.hpp"
#include "cspq/sampler.hpp"
#include "test_support.hpp"

using namespace cspq;
using namespace cspq::testing;

TEST_CASE("decode reads one symbol per position") {
  const CspInstance instance = set1();

  const DecodedOutcome plain = decode(one_hot(instance, {1, 1, 1}), instance);
  REQUIRE(plain.is_valid);
  CHECK(plain.value == u32("aaa"));

  // Strings 1 and 2 share 'a' at position 1: selecting both still decodes.
  Assignment duplicate = one_hot(instance, {1, 1, 1});
  duplicate[flat_index(2, 1, instance.n)] = 1;
  const DecodedOutcome tolerant = decode(duplicate, instance);
  REQUIRE(tolerant.is_valid);
  CHECK(tolerant.value == u32("aaa"));

  // The same pattern fails under strict one-hot decoding.
  const DecodedOutcome strict = decode(duplicate, instance, true);
  CHECK_FALSE(strict.is_valid);
  CHECK(strict.reason == InvalidReason::ConflictingSymbols);
  CHECK(strict.position == 1);
}

TEST_CASE("decode reports the first offending position") {
  const CspInstance instance = set1();

  const DecodedOutcome zeros =
      decode(Assignment(instance.n * instance.m, 0), instance);
  CHECK_FALSE(zeros.is_valid);
  CHECK(zeros.reason == InvalidReason::ZeroSelected);
  CHECK(zeros.position == 1);

  // Conflict at position 1 (symbols 'a' and 'd'), nothing selected later:
  // the conflict is reported because it comes first.
  Assignment conflicted(instance.n * instance.m, 0);
  conflicted[flat_index(1, 1, instance.n)] = 1;
  conflicted[flat_index(3, 1, instance.n)] = 1;
  conflicted[flat_index(1, 2, instance.n)] = 1;
  conflicted[flat_index(1, 3, instance.n)] = 1;
  const DecodedOutcome conflict = decode(conflicted, instance);
  CHECK_FALSE(conflict.is_valid);
  CHECK(conflict.reason == InvalidReason::ConflictingSymbols);
  CHECK(conflict.position == 1);

  // Valid at position 1, empty at position 2.
  Assignment partial(instance.n * instance.m, 0);
  partial[flat_index(1, 1, instance.n)] = 1;
  partial[flat_index(2, 3, instance.n)] = 1;
  const DecodedOutcome hole = decode(partial, instance);
  CHECK_FALSE(hole.is_valid);
  CHECK(hole.reason == InvalidReason::ZeroSelected);
  CHECK(hole.position == 2);

  CHECK_THROWS_AS(decode(Assignment(4, 0), instance), LengthMismatchError);
}

namespace {

SampleSet make_samples(std::vector<SampleRecord> records) {
  SampleSet samples;
  std::size_t reads = 0;
  for (const SampleRecord& record : records) reads += record.count;
  samples.records = std::move(records);
  samples.num_reads = reads;
  return samples;
}

}  // namespace

TEST_CASE("occurrence_report pools counts per decoded string") {
  const CspInstance instance = set3();
  // 53 reads decode "ded", 40 decode "ddd", 7 invalid.
  Assignment ded = one_hot(instance, {3, 3, 3});
  Assignment ddd = one_hot(instance, {6, 6, 6});
  Assignment zeros(instance.n * instance.m, 0);
  const SampleSet samples = make_samples({
      SampleRecord{ded, 82.0, 53},
      SampleRecord{ddd, 83.0, 40},
      SampleRecord{zeros, 90.0, 7},
  });
  const OccurrenceReport report = occurrence_report(samples, instance);
  CHECK(report.num_reads == 100);
  CHECK(report.per_string.at(u32("ded")).count == 53);
  CHECK(report.per_string.at(u32("ded")).ratio == doctest::Approx(0.53));
  CHECK(report.invalid_count == 7);
  CHECK(report.mor == doctest::Approx(0.53));
  REQUIRE(report.mor_strings.size() == 1);
  CHECK(report.mor_strings.front() == u32("ded"));
}

TEST_CASE("distinct assignments decoding alike fall into one bucket") {
  const CspInstance instance = set1();
  const Assignment first = one_hot(instance, {1, 1, 1});
  const Assignment second = one_hot(instance, {2, 2, 2});
  CHECK(first != second);
  const SampleSet samples = make_samples({
      SampleRecord{first, 15.0, 60},
      SampleRecord{second, 15.0, 40},
  });
  const OccurrenceReport report = occurrence_report(samples, instance);
  CHECK(report.per_string.size() == 1);
  CHECK(report.per_string.at(u32("aaa")).count == 100);
  CHECK(report.per_string.at(u32("aaa")).ratio == 1.0);
  CHECK(report.mor == 1.0);
}

TEST_CASE("an all-invalid sample set reports MOR zero") {
  const CspInstance instance = set1();
  const SampleSet samples = make_samples({
      SampleRecord{Assignment(instance.n * instance.m, 0), 18.0, 10},
  });
  const OccurrenceReport report = occurrence_report(samples, instance);
  CHECK(report.per_string.empty());
  CHECK(report.invalid_count == 10);
  CHECK(report.mor == 0.0);
  CHECK(report.mor_strings.empty());
}

TEST_CASE("counts plus invalids always equal the read count") {
  const CspInstance instance = set2();
  const QuboModel model = build_hamiltonian(instance, PenaltyParams{3.0, 1.0},
                                            HamiltonianKind::standard());
  const SampleSet samples = sample_sa(model, 77, default_schedule(model), 3);
  const OccurrenceReport report = occurrence_report(samples, instance);
  std::size_t bucketed = 0;
  for (const auto& [value, entry] : report.per_string) {
    (void)value;
    bucketed += entry.count;
    CHECK(entry.ratio ==
          doctest::Approx(static_cast<double>(entry.count) / 77.0));
  }
  CHECK(bucketed + report.invalid_count == 77);
  if (!report.per_string.empty()) {
    CHECK(!report.mor_strings.empty());
  }
}

TEST_CASE("tied maxima list every attaining string") {
  const CspInstance instance = set1();
  const SampleSet samples = make_samples({
      SampleRecord{one_hot(instance, {1, 1, 1}), 15.0, 5},
      SampleRecord{one_hot(instance, {3, 3, 3}), 18.0, 5},
  });
  const OccurrenceReport report = occurrence_report(samples, instance);
  CHECK(report.mor == doctest::Approx(0.5));
  REQUIRE(report.mor_strings.size() == 2);
  CHECK(report.mor_strings[0] == u32("aaa"));
  CHECK(report.mor_strings[1] == u32("ddd"));
}

TEST_CASE("table rows format the shared number style") {
  ResultRow row;
  row.set_label = "set3";
  row.p = "ded";
  row.constraint_weight = 5.0;
  row.objective_weight = 1.0;
  row.gamma = 6.0;
  row.or_p = 0.53;
  row.mor = 0.53;
  const std::string header = format_table_header();
  const std::string line = format_table_row(row);
  CHECK(header.find("OR_P") != std::string::npos);
  CHECK(line.find("set3") != std::string::npos);
  CHECK(line.find("ded") != std::string::npos);
  CHECK(line.find("0.53") != std::string::npos);
  CHECK(format_number(0.53) == "0.53");
  CHECK(format_number(5.0) == "5");
}
