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

#include "addhash/classify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

namespace addhash {

VectorIndex::VectorIndex(std::size_t dim) : dim_(dim) {
  if (dim == 0) throw std::invalid_argument("VectorIndex: dimension must be >= 1");
}

void VectorIndex::add(const FeatureVector& row, std::string label) {
  if (row.dim() != dim_) {
    throw std::invalid_argument("VectorIndex: row dimension " + std::to_string(row.dim()) +
                                " does not match index dimension " + std::to_string(dim_));
  }
  const double norm = l2_norm(row.values());
  if (!row.normalized() || (std::abs(norm - 1.0) > 1e-9 && !row.is_zero())) {
    throw std::invalid_argument("VectorIndex: rows must be L2-normalized");
  }
  data_.insert(data_.end(), row.values().begin(), row.values().end());
  labels_.push_back(std::move(label));
}

NnResult nn_classify(const FeatureVector& query, const VectorIndex& index) {
  if (index.empty()) throw std::invalid_argument("nn_classify: empty index");
  if (query.dim() != index.dim()) {
    throw std::invalid_argument("nn_classify: query dimension " + std::to_string(query.dim()) +
                                " does not match index dimension " +
                                std::to_string(index.dim()));
  }
  std::size_t best = 0;
  double best_score = dot(query.values(), index.row(0));
  for (std::size_t i = 1; i < index.size(); ++i) {
    const double s = dot(query.values(), index.row(i));
    if (s > best_score) {
      best_score = s;
      best = i;
    }
  }
  return {index.label(best), best_score, best, query.is_zero()};
}

std::vector<NnResult> classify_batch(std::span<const FeatureVector> queries,
                                     const VectorIndex& index, unsigned threads) {
  std::vector<NnResult> results(queries.size());
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, queries.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < queries.size(); ++i) results[i] = nn_classify(queries[i], index);
    return results;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < queries.size(); i += threads) {
        results[i] = nn_classify(queries[i], index);
      }
    });
  }
  return results;  // jthreads join before the vector is returned
}

ScoreMatrix::ScoreMatrix(std::span<const FeatureVector> vectors)
    : n_(vectors.size()), scores_(n_ * n_) {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i; j < n_; ++j) {
      const double s = dot(vectors[i].values(), vectors[j].values());
      scores_[i * n_ + j] = s;
      scores_[j * n_ + i] = s;
    }
  }
}

std::size_t ScoreMatrix::nearest(std::size_t query,
                                 std::span<const std::size_t> candidates) const {
  const double* row = scores_.data() + query * n_;
  std::size_t best = 0;
  double best_score = row[candidates[0]];
  for (std::size_t c = 1; c < candidates.size(); ++c) {
    const double s = row[candidates[c]];
    if (s > best_score) {
      best_score = s;
      best = c;
    }
  }
  return best;
}

MetricsReport spam_metrics(std::span<const std::string> predictions,
                           std::span<const std::string> truth, const std::string& positive) {
  if (predictions.size() != truth.size()) {
    throw std::invalid_argument("spam_metrics: predictions and truth differ in length");
  }
  if (truth.empty()) throw std::invalid_argument("spam_metrics: empty input");
  MetricsReport r;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool is_spam = truth[i] == positive;
    const bool said_spam = predictions[i] == positive;
    if (is_spam) {
      said_spam ? ++r.tp : ++r.fn;
    } else {
      // Any two non-positive labels are both ham; a mismatch between them is
      // still a correct ham call.
      said_spam ? ++r.fp : ++r.tn;
    }
  }
  const double total = static_cast<double>(truth.size());
  r.acc = static_cast<double>(r.tp + r.tn) / total;
  const std::size_t spam = r.tp + r.fn;
  const std::size_t ham = r.tn + r.fp;
  r.sc_defined = spam > 0;
  r.bh_defined = ham > 0;
  r.sc = r.sc_defined ? static_cast<double>(r.tp) / static_cast<double>(spam)
                      : std::numeric_limits<double>::quiet_NaN();
  r.bh = r.bh_defined ? static_cast<double>(r.fp) / static_cast<double>(ham)
                      : std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace addhash
