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

#include "addhash/textseg.hpp"
#include "addhash/vecspace.hpp"

namespace addhash {

struct HashTrickConfig {
  std::size_t dim = 1024;
  bool signed_updates = true;  // sign hash for collision mitigation

  void validate() const;
};

struct HashSlot {
  std::size_t index;
  int sign;  // +1 or -1
};

/// Index = |h| mod L with |-2^31| taken as 2^31; sign(h) with sign(0) = +1.
HashSlot hash_slot(std::int32_t h, std::size_t dim);

/// Unnormalized count vector: +1 per token at its slot, or +sign(h) when
/// signed updates are enabled.
FeatureVector ht_accumulate(const TokenSequence& tokens, const HashTrickConfig& cfg);

/// L2-normalized hashing-trick vector. An empty sequence gives the zero sentinel.
FeatureVector ht_encode(const TokenSequence& tokens, const HashTrickConfig& cfg);

}  // namespace addhash
