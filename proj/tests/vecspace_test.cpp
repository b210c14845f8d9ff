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

#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "addhash/addhash.hpp"
#include "addhash/rng.hpp"
#include "addhash/vecspace.hpp"

namespace addhash {
namespace {

FeatureVector basis(std::size_t dim, std::size_t k) {
  FeatureVector v(dim);
  v.mutable_values()[k] = 1.0;
  return FeatureVector(std::vector<double>(v.values().begin(), v.values().end()), true);
}

FeatureVector random_vector(Rng& rng, std::size_t dim) {
  std::vector<double> v(dim);
  for (auto& x : v) x = rng.uniform01() * 2.0 - 1.0;
  return FeatureVector(std::move(v), false);
}

TEST(L2Normalize, ThreeFourFive) {
  const auto v = l2_normalize(FeatureVector({3.0, 4.0}, false));
  EXPECT_TRUE(v.normalized());
  EXPECT_DOUBLE_EQ(v[0], 0.6);
  EXPECT_DOUBLE_EQ(v[1], 0.8);
}

TEST(L2Normalize, ZeroSentinelPassesThrough) {
  const auto v = l2_normalize(FeatureVector(16));
  EXPECT_TRUE(v.normalized());
  EXPECT_TRUE(v.is_zero());
  EXPECT_EQ(v.dim(), 16u);
}

TEST(L2Normalize, IdempotentProperty) {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const auto once = l2_normalize(random_vector(rng, 1 + rng.uniform_below(300)));
    const auto twice = l2_normalize(once);
    EXPECT_NEAR(l2_norm(once.values()), 1.0, 1e-12);
    for (std::size_t k = 0; k < once.dim(); ++k) EXPECT_NEAR(once[k], twice[k], 1e-15);
  }
}

TEST(Cosine, BasisVectors) {
  EXPECT_EQ(cosine(basis(4, 0), basis(4, 0)), 1.0);
  EXPECT_EQ(cosine(basis(4, 0), basis(4, 1)), 0.0);
  EXPECT_THROW(cosine(basis(4, 0), basis(5, 0)), std::invalid_argument);
}

TEST(Cosine, SelfSimilarityAndSymmetry) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = 1 + rng.uniform_below(512);
    const auto u = l2_normalize(random_vector(rng, dim));
    const auto v = l2_normalize(random_vector(rng, dim));
    EXPECT_NEAR(cosine(u, u), 1.0, 1e-12);
    EXPECT_EQ(cosine(u, v), cosine(v, u));
    EXPECT_LE(std::abs(cosine(u, v)), 1.0);
  }
}

TEST(AngleCosine, MatchesNormalizedCosineAndIsExactOnCopies) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const std::size_t dim = 1 + rng.uniform_below(256);
    const auto u = random_vector(rng, dim);
    const auto v = random_vector(rng, dim);
    EXPECT_NEAR(angle_cosine(u, v), cosine(l2_normalize(u), l2_normalize(v)), 1e-12);
    EXPECT_EQ(angle_cosine(u, u), 1.0);
  }
  EXPECT_EQ(angle_cosine(FeatureVector(4), basis(4, 1)), 0.0);
}

TEST(OrthogonalityStats, RejectsFewerThanTwoDistinctTokens) {
  const RandomizerConfig cfg{64};
  const auto enc = [&](std::string_view t) { return randomize(t, cfg); };
  const std::vector<std::string> same{"aa", "aa"};
  EXPECT_THROW(orthogonality_stats(same, enc), std::invalid_argument);
  const std::vector<std::string> none;
  EXPECT_THROW(orthogonality_stats(none, enc), std::invalid_argument);
}

TEST(OrthogonalityStats, MatchesDirectPairwiseComputation) {
  // Two-pass mean/std over an explicit pair list, independent of Welford.
  const RandomizerConfig cfg{128};
  const std::vector<std::string> tokens{"alpha", "beta", "gamma", "delta", "beta", "eps"};
  const auto stats =
      orthogonality_stats(tokens, [&](std::string_view t) { return randomize(t, cfg); });
  const std::vector<std::string> distinct{"alpha", "beta", "gamma", "delta", "eps"};
  std::vector<double> dots;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      const auto a = randomize(distinct[i], cfg);
      const auto b = randomize(distinct[j], cfg);
      double s = 0.0;
      for (std::size_t k = 0; k < cfg.dim; ++k) s += a[k] * b[k];
      dots.push_back(s);
    }
  }
  double mean = 0.0;
  for (double d : dots) mean += d;
  mean /= static_cast<double>(dots.size());
  double var = 0.0;
  for (double d : dots) var += (d - mean) * (d - mean);
  var /= static_cast<double>(dots.size() - 1);
  EXPECT_EQ(stats.pairs, 10u);
  EXPECT_NEAR(stats.mean, mean, 1e-12);
  EXPECT_NEAR(stats.stddev, std::sqrt(var), 1e-12);
}

std::vector<std::string> random_tokens(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::set<std::string> seen;
  std::vector<std::string> out;
  while (out.size() < count) {
    std::string t;
    const auto len = 6 + rng.uniform_below(7);
    for (std::uint64_t i = 0; i < len; ++i) t += static_cast<char>('a' + rng.uniform_below(26));
    if (seen.insert(t).second) out.push_back(t);
  }
  return out;
}

// Bounds: |mean| <= 4 sigma / sqrt(pairs) with sigma = 1/sqrt(L); std within
// the stated band around 1/sqrt(L).
TEST(OrthogonalityStats, NearOrthogonalAt1024) {
  const auto tokens = random_tokens(1000, 101);
  const RandomizerConfig cfg{1024};
  const auto s = orthogonality_stats(tokens, [&](std::string_view t) { return randomize(t, cfg); });
  EXPECT_EQ(s.pairs, 499500u);
  EXPECT_LE(std::abs(s.mean), 0.004);
  EXPECT_GE(s.stddev, 0.028);
  EXPECT_LE(s.stddev, 0.035);
}

TEST(OrthogonalityStats, NearOrthogonalAt256) {
  const auto tokens = random_tokens(1000, 202);
  const RandomizerConfig cfg{256};
  const auto s = orthogonality_stats(tokens, [&](std::string_view t) { return randomize(t, cfg); });
  EXPECT_LE(std::abs(s.mean), 4.0 * (1.0 / 16.0) / std::sqrt(static_cast<double>(s.pairs)));
  EXPECT_GE(s.stddev, 0.056);
  EXPECT_LE(s.stddev, 0.069);
}

}  // namespace
}  // namespace addhash
