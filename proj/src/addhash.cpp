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

#include "addhash/addhash.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "addhash/shake256.hpp"

namespace addhash {
namespace {

// Calls fn(k, bit) for every component k of the token's digest.
template <typename Fn>
void for_each_digest_bit(std::string_view token, std::size_t dim, Fn&& fn) {
  const std::size_t nbytes = dim / 8;
  const auto digest = shake256(token, nbytes);
  for (std::size_t byte = 0; byte < nbytes; ++byte) {
    const std::uint8_t d = digest[nbytes - 1 - byte];
    for (int b = 0; b < 8; ++b) {
      fn(byte * 8 + b, (d >> (7 - b)) & 1);
    }
  }
}

}  // namespace

void RandomizerConfig::validate() const {
  if (dim == 0 || dim % 8 != 0) {
    throw std::invalid_argument("additive-hash dimension must be a positive multiple of 8, got " +
                                std::to_string(dim));
  }
}

std::vector<std::int8_t> token_signs(std::string_view token, const RandomizerConfig& cfg) {
  cfg.validate();
  std::vector<std::int8_t> signs(cfg.dim);
  for_each_digest_bit(token, cfg.dim,
                      [&](std::size_t k, int bit) { signs[k] = bit ? 1 : -1; });
  return signs;
}

FeatureVector randomize(std::string_view token, const RandomizerConfig& cfg) {
  cfg.validate();
  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg.dim));
  std::vector<double> values(cfg.dim);
  for_each_digest_bit(token, cfg.dim,
                      [&](std::size_t k, int bit) { values[k] = bit ? scale : -scale; });
  return FeatureVector(std::move(values), true);
}

AhAccumulator::AhAccumulator(const RandomizerConfig& cfg) : cfg_(cfg) {
  cfg_.validate();
  counts_.assign(cfg_.dim, 0);
}

void AhAccumulator::apply(std::string_view token, std::int32_t direction) {
  for_each_digest_bit(token, cfg_.dim, [&](std::size_t k, int bit) {
    counts_[k] += bit ? direction : -direction;
  });
}

void AhAccumulator::add(std::string_view token) {
  apply(token, 1);
  ++token_count_;
}

void AhAccumulator::remove(std::string_view token) {
  if (token_count_ == 0) {
    throw std::logic_error("AhAccumulator: remove from an empty accumulator");
  }
  apply(token, -1);
  --token_count_;
}

FeatureVector AhAccumulator::raw_sum() const {
  const double scale = 1.0 / std::sqrt(static_cast<double>(cfg_.dim));
  std::vector<double> values(counts_.size());
  for (std::size_t k = 0; k < counts_.size(); ++k) values[k] = counts_[k] * scale;
  return FeatureVector(std::move(values), false);
}

AhAccumulator ah_update(AhAccumulator acc, std::optional<std::string_view> remove,
                        std::optional<std::string_view> add) {
  if (remove) acc.remove(*remove);
  if (add) acc.add(*add);
  return acc;
}

AhAccumulator ah_accumulate(const TokenSequence& tokens, const RandomizerConfig& cfg) {
  AhAccumulator acc(cfg);
  for (const auto& t : tokens) acc.add(t);
  return acc;
}

FeatureVector ah_raw(const TokenSequence& tokens, const RandomizerConfig& cfg) {
  return ah_accumulate(tokens, cfg).raw_sum();
}

FeatureVector ah_encode(const TokenSequence& tokens, const RandomizerConfig& cfg) {
  return l2_normalize(ah_raw(tokens, cfg));
}

}  // namespace addhash
