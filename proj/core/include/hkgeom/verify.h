// Copyright 2026 The hkgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HKGEOM_VERIFY_H_
#define HKGEOM_VERIFY_H_

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hkgeom/model.h"

namespace hkgeom {

// Randomised certification suites for the axioms of H_k.
//
// Sample i of a suite runs under k = k_values[i % k_values.size()] and draws
// from its own generator seeded from (seed, suite, i), so the outcome of a
// sample does not depend on the order or thread in which it is evaluated.
// A failing sample is recorded, never thrown.

enum class Suite {
  kIncidence,
  kMetric,
  kRuler,
  kPsaPasch,
  kParallel,
  kOracle,
  kAngle,
};

std::string_view suite_name(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
std::span<const Suite> all_suites();

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::vector<double> k_values = {0.5, 1.0, 2.0};
  std::optional<std::string> report_path;
  unsigned threads = 1;

  // Throws GeometryError(kInvalidConfig).
  void validate() const;
};

struct Field {
  std::string name;
  double value;
};

// Outcome of one sample. For a failure, `check` names the first check that
// failed and `inputs` holds everything needed to re-run it.
struct CheckRecord {
  std::string suite;
  std::size_t sample_index = 0;
  bool passed = true;
  std::string check;
  std::vector<Field> inputs;
  double observed = 0.0;
  double expected = 0.0;
};

struct SuiteReport {
  std::string suite_name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Failing records, ordered by sample index.
  std::vector<CheckRecord> counterexamples;
  // One record per sample, ordered by sample index.
  std::vector<CheckRecord> records;
  std::chrono::duration<double> wall_time{0};
};

SuiteReport run_suite(Suite suite, const SuiteConfig& cfg);

// The line through two points contains both and is order independent.
SuiteReport incidence_suite(const SuiteConfig& cfg);
// Distance axioms and the triangle inequality.
SuiteReport metric_suite(const SuiteConfig& cfg);
// Ruler round trip and |f(P) - f(Q)| = d(P, Q).
SuiteReport ruler_suite(const SuiteConfig& cfg);
// Plane separation (partition, convexity, crossing) and Pasch.
SuiteReport psa_pasch_suite(const SuiteConfig& cfg);
// The two parallels through a point off a line.
SuiteReport parallel_suite(const SuiteConfig& cfg);
// Closed-form distance against the classical model and arc-length quadrature.
SuiteReport oracle_suite(const SuiteConfig& cfg);
// Angle measures: agreement at k = 1, pullback angle sums, SAS evidence.
SuiteReport angle_suite(const SuiteConfig& cfg);

// One JSON object per line: a record per sample followed by a summary line
// per suite. Wall time is not written, so equal configs give equal output.
void write_report(std::ostream& out, std::span<const SuiteReport> reports);

}  // namespace hkgeom

#endif  // HKGEOM_VERIFY_H_
