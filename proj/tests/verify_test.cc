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

#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>
#include <string>

#include "hkgeom/verify.h"

namespace hkgeom {
namespace {

SuiteConfig small_config() {
  SuiteConfig cfg;
  cfg.samples = 300;
  return cfg;
}

void expect_same(const SuiteReport& a, const SuiteReport& b) {
  ASSERT_EQ(a.records.size(), b.records.size());
  EXPECT_EQ(a.passed, b.passed);
  EXPECT_EQ(a.failed, b.failed);
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    const CheckRecord& x = a.records[i];
    const CheckRecord& y = b.records[i];
    EXPECT_EQ(x.sample_index, i);
    EXPECT_EQ(x.sample_index, y.sample_index);
    EXPECT_EQ(x.passed, y.passed);
    EXPECT_EQ(x.check, y.check);
    ASSERT_EQ(x.inputs.size(), y.inputs.size());
    for (std::size_t j = 0; j < x.inputs.size(); ++j) {
      EXPECT_EQ(x.inputs[j].name, y.inputs[j].name);
      EXPECT_EQ(x.inputs[j].value, y.inputs[j].value);
    }
  }
}

TEST(SuiteNameTest, RoundTrip) {
  for (Suite s : all_suites()) EXPECT_EQ(parse_suite(suite_name(s)), s);
  EXPECT_EQ(parse_suite("pasch"), Suite::kPsaPasch);
  EXPECT_FALSE(parse_suite("nosuch").has_value());
  EXPECT_EQ(all_suites().size(), 7u);
}

TEST(SuiteConfigTest, Validation) {
  SuiteConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.samples = 0;
  EXPECT_THROW(cfg.validate(), GeometryError);
  cfg = SuiteConfig{};
  cfg.k_values = {};
  EXPECT_THROW(cfg.validate(), GeometryError);
  cfg.k_values = {1.0, -2.0};
  EXPECT_THROW(cfg.validate(), GeometryError);
  EXPECT_THROW(incidence_suite(SuiteConfig{.samples = 0}), GeometryError);
}

TEST(IncidenceSuiteTest, DefaultConfigPasses) {
  const SuiteReport r = incidence_suite(SuiteConfig{});
  EXPECT_EQ(r.suite_name, "incidence");
  EXPECT_EQ(r.passed, 1000u);
  EXPECT_EQ(r.failed, 0u);
  EXPECT_TRUE(r.counterexamples.empty());
}

TEST(SuitesTest, AllPassAndAreDeterministic) {
  const SuiteConfig cfg = small_config();
  for (Suite s : all_suites()) {
    SCOPED_TRACE(std::string(suite_name(s)));
    const SuiteReport a = run_suite(s, cfg);
    const SuiteReport b = run_suite(s, cfg);
    EXPECT_EQ(a.passed + a.failed, cfg.samples);
    EXPECT_EQ(a.failed, 0u);
    EXPECT_EQ(a.counterexamples.empty(), a.failed == 0);
    expect_same(a, b);
  }
}

TEST(SuitesTest, NamedEntryPoints) {
  const SuiteConfig cfg = small_config();
  EXPECT_EQ(metric_suite(cfg).suite_name, "metric");
  EXPECT_EQ(ruler_suite(cfg).suite_name, "ruler");
  EXPECT_EQ(psa_pasch_suite(cfg).suite_name, "psa");
  EXPECT_EQ(parallel_suite(cfg).suite_name, "parallel");
  EXPECT_EQ(oracle_suite(cfg).suite_name, "oracle");
  EXPECT_EQ(angle_suite(cfg).suite_name, "angle");
}

TEST(SuitesTest, ThreadsDoNotChangeResults) {
  SuiteConfig serial = small_config();
  SuiteConfig parallel = serial;
  parallel.threads = 4;
  for (Suite s : {Suite::kMetric, Suite::kPsaPasch}) {
    expect_same(run_suite(s, serial), run_suite(s, parallel));
  }
}

TEST(SuitesTest, SeedChangesSamples) {
  SuiteConfig a = small_config();
  SuiteConfig b = a;
  b.seed = 43;
  const SuiteReport ra = metric_suite(a);
  const SuiteReport rb = metric_suite(b);
  ASSERT_EQ(ra.records[0].inputs[0].name, "k");
  EXPECT_NE(ra.records[0].inputs[1].value, rb.records[0].inputs[1].value);
}

TEST(SuitesTest, SampleUsesCyclicK) {
  SuiteConfig cfg = small_config();
  cfg.k_values = {0.25, 10.0};
  const SuiteReport r = ruler_suite(cfg);
  const auto k_of = [](const CheckRecord& rec) {
    for (const Field& f : rec.inputs) {
      if (f.name == "k") return f.value;
    }
    return -1.0;
  };
  EXPECT_EQ(k_of(r.records[0]), 0.25);
  EXPECT_EQ(k_of(r.records[1]), 10.0);
  EXPECT_EQ(k_of(r.records[2]), 0.25);
}

TEST(WriteReportTest, JsonLines) {
  SuiteConfig cfg = small_config();
  cfg.samples = 4;
  const SuiteReport reports[] = {metric_suite(cfg), ruler_suite(cfg)};
  std::ostringstream out;
  write_report(out, reports);
  std::istringstream in(out.str());
  std::vector<nlohmann::ordered_json> lines;
  for (std::string line; std::getline(in, line);) {
    lines.push_back(nlohmann::ordered_json::parse(line));
  }
  ASSERT_EQ(lines.size(), 10u);
  const auto& first = lines[0];
  std::vector<std::string> keys;
  for (const auto& [key, value] : first.items()) keys.push_back(key);
  EXPECT_EQ(keys, (std::vector<std::string>{"suite", "sample_index", "status",
                                            "check", "inputs", "observed",
                                            "expected"}));
  EXPECT_EQ(first["suite"], "metric");
  EXPECT_EQ(first["status"], "pass");
  EXPECT_EQ(lines[4]["status"], "summary");
  EXPECT_EQ(lines[4]["passed"], 4);
  EXPECT_EQ(lines[9]["suite"], "ruler");

  std::ostringstream again;
  write_report(again, reports);
  EXPECT_EQ(out.str(), again.str());
}

}  // namespace
}  // namespace hkgeom
