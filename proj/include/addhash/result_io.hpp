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

#pragma once

#include <ostream>
#include <span>
#include <string_view>

#include "addhash/experiments.hpp"
#include "addhash/vecspace.hpp"

namespace addhash {

enum class OutputFormat { Csv, JsonLines };

OutputFormat parse_format(std::string_view name);

inline constexpr std::string_view kCsvHeader =
    "experiment,method,n,L,p,metric,value,trials,seed";

/// Numbers are printed in shortest round-trip form, so equal rows always
/// produce equal bytes.
void write_rows(std::ostream& out, std::span<const ResultRow> rows, OutputFormat format);

/// CSV: one comma-separated line of components. JSON: an object holding
/// dim, normalized and values.
void write_vector(std::ostream& out, const FeatureVector& v, OutputFormat format);

}  // namespace addhash
