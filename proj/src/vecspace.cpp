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

#include "addhash/vecspace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace addhash {

bool FeatureVector::is_zero() const {
  return std::all_of(values_.begin(), values_.end(),
                     [](double x) { return x == 0.0; });
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  // Four independent partial sums; the order is fixed so results are stable.
  double s0 = 0.0, s1 = 0.0, s2 = 0.0, s3 = 0.0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    s0 += a[i] * b[i];
    s1 += a[i + 1] * b[i + 1];
    s2 += a[i + 2] * b[i + 2];
    s3 += a[i + 3] * b[i + 3];
  }
  for (; i < n; ++i) s0 += a[i] * b[i];
  return (s0 + s1) + (s2 + s3);
}

double l2_norm(std::span<const double> v) { return std::sqrt(dot(v, v)); }

FeatureVector l2_normalize(const FeatureVector& v) {
  const double norm = l2_norm(v.values());
  if (!(norm > 1e-12)) {
    return FeatureVector(std::vector<double>(v.values().begin(), v.values().end()),
                         true);
  }
  std::vector<double> out(v.values().begin(), v.values().end());
  for (auto& x : out) x /= norm;
  return FeatureVector(std::move(out), true);
}

namespace {

void check_dims(const FeatureVector& u, const FeatureVector& v) {
  if (u.dim() != v.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(u.dim()) +
                                " vs " + std::to_string(v.dim()));
  }
}

double clamp_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

double cosine(const FeatureVector& u, const FeatureVector& v) {
  check_dims(u, v);
  return clamp_unit(dot(u.values(), v.values()));
}

double angle_cosine(const FeatureVector& u, const FeatureVector& v) {
  check_dims(u, v);
  const double uu = dot(u.values(), u.values());
  const double vv = dot(v.values(), v.values());
  if (uu == 0.0 || vv == 0.0) return 0.0;
  // sqrt(x * x) == x in IEEE arithmetic, so identical inputs give exactly 1.
  return clamp_unit(dot(u.values(), v.values()) / std::sqrt(uu * vv));
}

OrthogonalityStats orthogonality_stats(std::span<const std::string> tokens,
                                       const TokenEncoder& encoder) {
  std::vector<FeatureVector> vecs;
  std::unordered_set<std::string_view> seen;
  for (const auto& t : tokens) {
    if (seen.insert(t).second) vecs.push_back(encoder(t));
  }
  if (vecs.size() < 2) {
    throw std::invalid_argument("need at least two distinct tokens");
  }
  // Welford's running mean and variance.
  OrthogonalityStats stats;
  double m2 = 0.0;
  for (std::size_t i = 0; i < vecs.size(); ++i) {
    for (std::size_t j = i + 1; j < vecs.size(); ++j) {
      const double x = dot(vecs[i].values(), vecs[j].values());
      ++stats.pairs;
      const double delta = x - stats.mean;
      stats.mean += delta / static_cast<double>(stats.pairs);
      m2 += delta * (x - stats.mean);
    }
  }
  stats.stddev =
      stats.pairs > 1 ? std::sqrt(m2 / static_cast<double>(stats.pairs - 1)) : 0.0;
  return stats;
}

}  // namespace addhash
