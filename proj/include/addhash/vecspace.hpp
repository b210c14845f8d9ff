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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace addhash {

/// Dense document vector of fixed dimension L.
///
/// A vector flagged normalized has unit L2 norm (to 1e-9), or is exactly
/// all-zero: the empty-document sentinel, which normalization passes through.
class FeatureVector {
 public:
  FeatureVector() = default;
  explicit FeatureVector(std::size_t dim) : values_(dim, 0.0) {}
  FeatureVector(std::vector<double> values, bool normalized)
      : values_(std::move(values)), normalized_(normalized) {}

  std::size_t dim() const { return values_.size(); }
  bool normalized() const { return normalized_; }
  bool is_zero() const;

  std::span<const double> values() const { return values_; }
  std::span<double> mutable_values() { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;

 private:
  std::vector<double> values_;
  bool normalized_ = false;
};

/// Plain dot product. Accumulation order is fixed, so the result is
/// reproducible bit for bit. Spans must have equal length.
double dot(std::span<const double> a, std::span<const double> b);

double l2_norm(std::span<const double> v);

/// v / ||v||. Vectors with norm <= 1e-12 come back unchanged, flagged
/// normalized.
FeatureVector l2_normalize(const FeatureVector& v);

/// Dot product of two normalized vectors, clamped to [-1, 1].
/// Throws std::invalid_argument on dimension mismatch.
double cosine(const FeatureVector& u, const FeatureVector& v);

/// Cosine of the angle between two arbitrary (unnormalized) vectors,
/// computed as <u,v> / sqrt(<u,u><v,v>) and clamped to [-1, 1].
/// Returns exactly 1 for bitwise-identical nonzero inputs and 0 when either
/// input is zero.
double angle_cosine(const FeatureVector& u, const FeatureVector& v);

struct OrthogonalityStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation
  std::size_t pairs = 0;
};

using TokenEncoder = std::function<FeatureVector(std::string_view)>;

/// Mean and sample standard deviation of dot products over all unordered
/// pairs of distinct tokens in the sample. Duplicates are dropped before
/// pairing. Throws std::invalid_argument if fewer than two distinct tokens
/// remain.
OrthogonalityStats orthogonality_stats(std::span<const std::string> tokens,
                                       const TokenEncoder& encoder);

}  // namespace addhash
