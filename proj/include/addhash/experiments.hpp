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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "addhash/datasets.hpp"
#include "addhash/textseg.hpp"
#include "addhash/vecspace.hpp"

namespace addhash {

enum class Method { AH, HtSigned, HtUnsigned };

std::string_view method_name(Method m);
/// Accepts "ah", "ht" and "ht-unsigned".
Method parse_method(std::string_view name);

/// Bad experiment configuration or command-line usage.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Unnormalized document vector for the given method and dimension.
FeatureVector encode_raw(const TokenSequence& tokens, Method method, std::size_t dim);
FeatureVector encode(const TokenSequence& tokens, Method method, std::size_t dim);

struct ExperimentConfig {
  std::vector<Method> methods = {Method::AH, Method::HtSigned};
  std::size_t ngram = 3;
  std::vector<int> dim_exponents;  // L = 2^l
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::filesystem::path data;
  bool lowercase = false;

  // synthetic
  std::size_t string_length = 100;
  std::vector<double> p_grid = default_p_grid();

  // wili desk-scale subset; ignored when full is set
  std::size_t languages = 20;
  std::size_t per_class = 100;
  bool full = false;

  // sms
  double train_fraction = 0.5;

  unsigned threads = 0;  // 0 = hardware concurrency

  /// 0, 0.05, ..., 1.0
  static std::vector<double> default_p_grid();

  TokenizerSpec tokenizer() const;
  std::vector<std::size_t> dims() const;
  /// Throws UsageError.
  void validate() const;
};

struct ResultRow {
  std::string experiment;
  std::string method;
  std::size_t n = 0;
  std::size_t dim = 0;
  std::optional<double> p;
  std::string metric;  // similarity, acc, sc or bh
  double value = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;

  friend bool operator==(const ResultRow&, const ResultRow&) = default;
};

/// Orders rows by (experiment, method, L, p, metric).
void sort_rows(std::vector<ResultRow>& rows);

/// Mean cosine between random lowercase strings and perturbed copies, for
/// every p on the grid, every L and every configured method. Trial t uses
/// seed + t for both the base string and its perturbation.
std::vector<ResultRow> run_synthetic(const ExperimentConfig& cfg);

/// Nearest-neighbor language identification on a train/test pair. The
/// loaded data is passed in so callers decide between a subset and the full
/// corpus.
std::vector<ResultRow> run_wili(const ExperimentConfig& cfg, const TrainTest& data);
/// Loads cfg.data and applies the desk-scale subset unless cfg.full is set.
std::vector<ResultRow> run_wili(const ExperimentConfig& cfg);

/// Mean ACC, SC and BH over cfg.trials random splits; split t uses seed + t.
std::vector<ResultRow> run_sms(const ExperimentConfig& cfg, const LabeledDataset& corpus);
std::vector<ResultRow> run_sms(const ExperimentConfig& cfg);

}  // namespace addhash
