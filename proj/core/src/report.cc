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

#include <json.hpp>

#include "hkgeom/verify.h"

namespace hkgeom {

namespace {

using Json = nlohmann::ordered_json;

Json to_json(const CheckRecord& record) {
  Json inputs = Json::object();
  for (const auto& field : record.inputs) inputs[field.name] = field.value;
  Json j;
  j["suite"] = record.suite;
  j["sample_index"] = record.sample_index;
  j["status"] = record.passed ? "pass" : "fail";
  j["check"] = record.check;
  j["inputs"] = std::move(inputs);
  j["observed"] = record.observed;
  j["expected"] = record.expected;
  return j;
}

}  // namespace

void write_report(std::ostream& out, std::span<const SuiteReport> reports) {
  for (const auto& report : reports) {
    for (const auto& record : report.records) {
      out << to_json(record).dump() << '\n';
    }
    Json summary;
    summary["suite"] = report.suite_name;
    summary["status"] = "summary";
    summary["passed"] = report.passed;
    summary["failed"] = report.failed;
    out << summary.dump() << '\n';
  }
}

}  // namespace hkgeom
