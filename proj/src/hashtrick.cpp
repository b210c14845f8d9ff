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

#include "addhash/hashtrick.hpp"

#include <stdexcept>

#include "addhash/murmur3.hpp"

namespace addhash {

void HashTrickConfig::validate() const {
  if (dim == 0) throw std::invalid_argument("hashing-trick dimension must be >= 1");
}

HashSlot hash_slot(std::int32_t h, std::size_t dim) {
  const std::uint64_t magnitude =
      h < 0 ? static_cast<std::uint64_t>(-static_cast<std::int64_t>(h))
            : static_cast<std::uint64_t>(h);
  return {static_cast<std::size_t>(magnitude % dim), h >= 0 ? 1 : -1};
}

FeatureVector ht_accumulate(const TokenSequence& tokens, const HashTrickConfig& cfg) {
  cfg.validate();
  FeatureVector v(cfg.dim);
  auto values = v.mutable_values();
  for (const auto& token : tokens) {
    const auto slot = hash_slot(murmur32_signed(token), cfg.dim);
    values[slot.index] += cfg.signed_updates ? slot.sign : 1;
  }
  return v;
}

FeatureVector ht_encode(const TokenSequence& tokens, const HashTrickConfig& cfg) {
  return l2_normalize(ht_accumulate(tokens, cfg));
}

}  // namespace addhash
