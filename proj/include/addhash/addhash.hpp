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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "addhash/textseg.hpp"
#include "addhash/vecspace.hpp"

namespace addhash {

/// Dimension of the additive-hash token vectors. The randomizer draws L/8
/// bytes of SHAKE-256 output, so L must be a positive multiple of 8.
struct RandomizerConfig {
  std::size_t dim = 1024;

  void validate() const;
};

/// The L digest bits of a token as +1/-1 signs, in component order.
///
/// The digest D (L/8 bytes) is read as a little-endian integer and written
/// most-significant bit first: component k is bit 7 - (k % 8) of byte
/// D[L/8 - 1 - k / 8]. Bit 1 maps to +1 and bit 0 to -1.
std::vector<std::int8_t> token_signs(std::string_view token, const RandomizerConfig& cfg);

/// Unit token vector with components (2 b_k - 1) / sqrt(L).
FeatureVector randomize(std::string_view token, const RandomizerConfig& cfg);

/// Unnormalized running sum of token vectors.
///
/// Components are stored as integer sign counts so that the sum is exact
/// and independent of token order; raw_sum() scales them by 1/sqrt(L).
class AhAccumulator {
 public:
  explicit AhAccumulator(const RandomizerConfig& cfg);

  std::size_t dim() const { return counts_.size(); }
  std::size_t token_count() const { return token_count_; }
  std::span<const std::int32_t> sign_counts() const { return counts_; }

  void add(std::string_view token);
  /// Subtracts the token's vector. The caller must have added it before;
  /// throws std::logic_error if the accumulator is empty.
  void remove(std::string_view token);

  FeatureVector raw_sum() const;
  FeatureVector document() const { return l2_normalize(raw_sum()); }

 private:
  void apply(std::string_view token, std::int32_t direction);

  RandomizerConfig cfg_;
  std::vector<std::int32_t> counts_;
  std::size_t token_count_ = 0;
};

/// Replaces one token: subtracts remove's vector, then adds add's vector.
/// Either side may be absent. Throws std::logic_error if a removal would
/// drive the token count negative.
AhAccumulator ah_update(AhAccumulator acc, std::optional<std::string_view> remove,
                        std::optional<std::string_view> add);

AhAccumulator ah_accumulate(const TokenSequence& tokens, const RandomizerConfig& cfg);

/// Sum of token vectors, not normalized.
FeatureVector ah_raw(const TokenSequence& tokens, const RandomizerConfig& cfg);

/// Normalized additive-hash document vector; empty input gives the zero sentinel.
FeatureVector ah_encode(const TokenSequence& tokens, const RandomizerConfig& cfg);

}  // namespace addhash
