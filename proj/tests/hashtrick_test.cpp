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

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "addhash/hashtrick.hpp"
#include "addhash/murmur3.hpp"
#include "addhash/rng.hpp"

namespace addhash {
namespace {

const std::string kD0 = "John likes to watch movies";
const std::string kD1 = "Mary also likes to watch movies";
const std::string kD2 = "Jane makes popcorn";

// Published MurmurHash3_x86_32 verification vectors.
TEST(Murmur3, PublishedVectors) {
  EXPECT_EQ(murmur3_x86_32("", 0), 0u);
  EXPECT_EQ(murmur3_x86_32("", 1), 0x514E28B7u);
  EXPECT_EQ(murmur3_x86_32("", 0xffffffffu), 0x81F16F39u);
  EXPECT_EQ(murmur3_x86_32(std::string_view("\0\0\0\0", 4), 0), 0x2362F9DEu);
  EXPECT_EQ(murmur3_x86_32("aaaa", 0x9747b28cu), 0x5A97808Au);
  EXPECT_EQ(murmur3_x86_32("Hello, world!", 0x9747b28cu), 0x24884CBAu);
  EXPECT_EQ(murmur3_x86_32("The quick brown fox jumps over the lazy dog", 0x9747b28cu),
            0x2FA826CDu);
}

// Values from sklearn.utils.murmurhash3_32(token, seed=0) (signed output).
TEST(Murmur3, SignedSeedZeroMatchesReferenceVectorizerHash) {
  EXPECT_EQ(murmur32_signed(""), 0);
  EXPECT_EQ(murmur32_signed("john"), -807072345);
  EXPECT_EQ(murmur32_signed("movies"), -1106625755);
  EXPECT_EQ(murmur32_signed("likes"), 1103617568);
  EXPECT_EQ(murmur32_signed("popcorn"), 1744977520);
  EXPECT_EQ(murmur32_signed("a"), 1009084850);
  EXPECT_EQ(murmur32_signed("hello world"), 1586663183);
  EXPECT_EQ(murmur32_signed("été"), 865297935);
  EXPECT_EQ(murmur32_signed("日本語"), -1515949417);
}

TEST(HashSlot, WrapsMostNegativeAndSignsZeroPositive) {
  const auto min = hash_slot(std::numeric_limits<std::int32_t>::min(), 1000);
  EXPECT_EQ(min.index, 2147483648ull % 1000);
  EXPECT_EQ(min.sign, -1);
  EXPECT_EQ(hash_slot(0, 32).sign, 1);
  EXPECT_EQ(hash_slot(0, 32).index, 0u);
  EXPECT_EQ(hash_slot(-807072345, 32).index, 807072345u % 32);
  EXPECT_EQ(hash_slot(-807072345, 32).sign, -1);
}

TEST(HtEncode, ReferenceVectorizerGoldenValues) {
  const HashTrickConfig cfg{32, true};
  const auto v0 = ht_encode(tokenize_normalized(kD0), cfg);
  const auto v1 = ht_encode(tokenize_normalized(kD1), cfg);
  const auto v2 = ht_encode(tokenize_normalized(kD2), cfg);
  EXPECT_NEAR(cosine(v0, v1), 0.7302967433402215, 1e-12);
  EXPECT_NEAR(cosine(v0, v1), 4.0 / std::sqrt(30.0), 1e-12);
  EXPECT_NEAR(cosine(v0, v2), 0.0, 1e-12);
  EXPECT_NEAR(cosine(v1, v2), 0.0, 1e-12);
}

TEST(HtEncode, GoldenPairCollidesButCancels) {
  // At L=32 "likes"/"watch" share a slot with equal signs and "to"/"movies"
  // share one with opposite signs; the cosine still comes out as 4/sqrt(30).
  EXPECT_EQ(hash_slot(murmur32_signed("likes"), 32).index,
            hash_slot(murmur32_signed("watch"), 32).index);
  EXPECT_EQ(hash_slot(murmur32_signed("to"), 32).index,
            hash_slot(murmur32_signed("movies"), 32).index);
  const auto raw = ht_accumulate(tokenize_normalized(kD0), {32, true});
  EXPECT_EQ(dot(raw.values(), raw.values()), 5.0);
}

TEST(HtEncode, NoCollisionCosineIsSharedOverGeometricMean) {
  Rng rng(19);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::set<std::string> vocab_set;
    while (vocab_set.size() < 12) {
      std::string w(4, 'a');
      for (auto& c : w) c = static_cast<char>('a' + rng.uniform_below(26));
      vocab_set.insert(w);
    }
    const std::vector<std::string> vocab(vocab_set.begin(), vocab_set.end());
    std::set<std::size_t> slots;
    for (const auto& w : vocab) slots.insert(hash_slot(murmur32_signed(w), 4096).index);
    if (slots.size() != vocab.size()) continue;
    const auto shared = 1 + rng.uniform_below(5);
    const auto only0 = rng.uniform_below(4), only1 = 1 + rng.uniform_below(3);
    TokenSequence d0(vocab.begin(), vocab.begin() + shared + only0);
    TokenSequence d1(vocab.begin(), vocab.begin() + shared);
    d1.insert(d1.end(), vocab.begin() + 8, vocab.begin() + 8 + only1);
    const HashTrickConfig cfg{4096, true};
    const double expected =
        shared / std::sqrt(static_cast<double>(d0.size()) * static_cast<double>(d1.size()));
    EXPECT_NEAR(cosine(ht_encode(d0, cfg), ht_encode(d1, cfg)), expected, 1e-15);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(HtEncode, SingleTokenUnsignedIsOneHot) {
  const auto v = ht_encode({"word"}, {8, false});
  EXPECT_EQ(std::count(v.values().begin(), v.values().end(), 1.0), 1);
  EXPECT_EQ(std::count(v.values().begin(), v.values().end(), 0.0), 7);
}

TEST(HtEncode, EmptyDocumentIsZeroSentinel) {
  const auto v = ht_encode({}, {16, true});
  EXPECT_TRUE(v.is_zero());
  EXPECT_TRUE(v.normalized());
  EXPECT_THROW(ht_encode({"a"}, {0, true}), std::invalid_argument);
}

TokenSequence random_doc(Rng& rng, std::size_t n) {
  TokenSequence doc;
  for (std::size_t i = 0; i < n; ++i) {
    doc.push_back(std::string(1 + rng.uniform_below(3), static_cast<char>('a' + rng.uniform_below(6))));
  }
  return doc;
}

TEST(HtEncode, BagOfWordsProperties) {
  Rng rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 1 + rng.uniform_below(40);
    auto doc = random_doc(rng, rng.uniform_below(30));
    auto shuffled = doc;
    for (std::size_t i = shuffled.size(); i > 1; --i) {
      std::swap(shuffled[i - 1], shuffled[rng.uniform_below(i)]);
    }
    for (bool signed_updates : {false, true}) {
      const HashTrickConfig cfg{dim, signed_updates};
      EXPECT_EQ(ht_encode(doc, cfg), ht_encode(shuffled, cfg));
      const auto raw = ht_accumulate(doc, cfg);
      double sum = 0.0, abs_sum = 0.0;
      for (double x : raw.values()) {
        EXPECT_EQ(x, std::round(x));
        if (!signed_updates) EXPECT_GE(x, 0.0);
        sum += x;
        abs_sum += std::abs(x);
      }
      if (signed_updates) {
        EXPECT_LE(abs_sum, static_cast<double>(doc.size()));
      } else {
        EXPECT_EQ(sum, static_cast<double>(doc.size()));
      }
    }
  }
}

}  // namespace
}  // namespace addhash
