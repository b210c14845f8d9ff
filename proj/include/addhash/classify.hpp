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
#include <span>
#include <string>
#include <vector>

#include "addhash/vecspace.hpp"

namespace addhash {

/// Training vectors stored row-major with one label per row. Rows must be
/// normalized (unit norm to 1e-9, or the zero sentinel).
class VectorIndex {
 public:
  explicit VectorIndex(std::size_t dim);

  /// Throws std::invalid_argument on a dimension mismatch or a row that is
  /// not normalized.
  void add(const FeatureVector& row, std::string label);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  std::span<const double> row(std::size_t i) const {
    return std::span(data_).subspan(i * dim_, dim_);
  }
  const std::string& label(std::size_t i) const { return labels_[i]; }

 private:
  std::size_t dim_;
  std::vector<double> data_;
  std::vector<std::string> labels_;
};

struct NnResult {
  std::string label;
  double score = 0.0;
  std::size_t neighbor = 0;
  bool zero_query = false;  // query was the zero sentinel; neighbor is row 0
};

/// Row with the highest dot product; ties go to the lowest row index.
/// Throws std::invalid_argument for an empty index or a dimension mismatch.
NnResult nn_classify(const FeatureVector& query, const VectorIndex& index);

/// nn_classify for each query. Queries are independent, so the work is split
/// across up to `threads` workers (0 = hardware concurrency) without
/// changing results.
std::vector<NnResult> classify_batch(std::span<const FeatureVector> queries,
                                     const VectorIndex& index, unsigned threads = 0);

/// Symmetric matrix of pairwise dot products over a fixed set of vectors.
/// Entry (i, j) is bitwise equal to dot(v_i, v_j), so nearest-neighbor
/// answers read from it match nn_classify on the same rows exactly. Used
/// when many train/test splits are drawn from one corpus.
class ScoreMatrix {
 public:
  explicit ScoreMatrix(std::span<const FeatureVector> vectors);

  std::size_t size() const { return n_; }
  double operator()(std::size_t i, std::size_t j) const { return scores_[i * n_ + j]; }

  /// Position within `candidates` of the best-scoring candidate for `query`,
  /// lowest position on ties. `candidates` must be non-empty.
  std::size_t nearest(std::size_t query, std::span<const std::size_t> candidates) const;

 private:
  std::size_t n_;
  std::vector<double> scores_;
};

struct MetricsReport {
  double acc = 0.0;
  double sc = 0.0;  // spam caught: true positives / all positives
  double bh = 0.0;  // blocked hams: false positives / all negatives
  bool sc_defined = true;
  bool bh_defined = true;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
};

/// Binary metrics where `positive` is the spam label and every other label
/// counts as ham. SC (BH) is NaN with sc_defined (bh_defined) false when the
/// truth holds no positives (negatives). Throws std::invalid_argument on
/// empty or unequal-length inputs.
MetricsReport spam_metrics(std::span<const std::string> predictions,
                           std::span<const std::string> truth,
                           const std::string& positive = "spam");

}  // namespace addhash
