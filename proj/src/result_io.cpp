// Copyright 2026 The addhash Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "addhash/result_io.hpp"

#include <fmt/format.h>

#include <json.hpp>

namespace addhash {

OutputFormat parse_format(std::string_view name) {
  if (name == "csv") return OutputFormat::Csv;
  if (name == "json") return OutputFormat::JsonLines;
  throw UsageError("unknown format '" + std::string(name) + "' (expected csv or json)");
}

void write_rows(std::ostream& out, std::span<const ResultRow> rows, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << kCsvHeader << '\n';
    for (const auto& r : rows) {
      out << fmt::format("{},{},{},{},{},{},{},{},{}\n", r.experiment, r.method, r.n, r.dim,
                         r.p ? fmt::format("{}", *r.p) : std::string(), r.metric, r.value,
                         r.trials, r.seed);
    }
    return;
  }
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["experiment"] = r.experiment;
    j["method"] = r.method;
    j["n"] = r.n;
    j["L"] = r.dim;
    j["p"] = r.p ? nlohmann::ordered_json(*r.p) : nlohmann::ordered_json(nullptr);
    j["metric"] = r.metric;
    j["value"] = r.value;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    out << j.dump() << '\n';
  }
}

void write_vector(std::ostream& out, const FeatureVector& v, OutputFormat format) {
  if (format == OutputFormat::Csv) {
    out << fmt::format("{}\n", fmt::join(v.values(), ","));
    return;
  }
  nlohmann::ordered_json j;
  j["dim"] = v.dim();
  j["normalized"] = v.normalized();
  j["values"] = std::vector<double>(v.values().begin(), v.values().end());
  out << j.dump() << '\n';
}

}  // namespace addhash
