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

#include "addhash/murmur3.hpp"

#include <bit>

namespace addhash {
namespace {

constexpr std::uint32_t kC1 = 0xcc9e2d51;
constexpr std::uint32_t kC2 = 0x1b873593;

inline std::uint32_t fmix32(std::uint32_t h) {
  h ^= h >> 16;
  h *= 0x85ebca6b;
  h ^= h >> 13;
  h *= 0xc2b2ae35;
  h ^= h >> 16;
  return h;
}

inline std::uint32_t mix_k1(std::uint32_t k1) {
  k1 *= kC1;
  k1 = std::rotl(k1, 15);
  return k1 * kC2;
}

}  // namespace

std::uint32_t murmur3_x86_32(std::span<const std::uint8_t> data, std::uint32_t seed) {
  const std::size_t len = data.size();
  const std::size_t nblocks = len / 4;
  std::uint32_t h1 = seed;

  // Blocks are read little-endian regardless of host byte order.
  for (std::size_t i = 0; i < nblocks; ++i) {
    const auto* p = data.data() + 4 * i;
    std::uint32_t k1 = std::uint32_t(p[0]) | (std::uint32_t(p[1]) << 8) |
                       (std::uint32_t(p[2]) << 16) | (std::uint32_t(p[3]) << 24);
    h1 ^= mix_k1(k1);
    h1 = std::rotl(h1, 13);
    h1 = h1 * 5 + 0xe6546b64;
  }

  const auto* tail = data.data() + 4 * nblocks;
  std::uint32_t k1 = 0;
  switch (len & 3) {
    case 3:
      k1 ^= std::uint32_t(tail[2]) << 16;
      [[fallthrough]];
    case 2:
      k1 ^= std::uint32_t(tail[1]) << 8;
      [[fallthrough]];
    case 1:
      k1 ^= tail[0];
      h1 ^= mix_k1(k1);
  }

  h1 ^= static_cast<std::uint32_t>(len);
  return fmix32(h1);
}

std::uint32_t murmur3_x86_32(std::string_view data, std::uint32_t seed) {
  return murmur3_x86_32(
      std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()), seed);
}

std::int32_t murmur32_signed(std::string_view token) {
  return std::bit_cast<std::int32_t>(murmur3_x86_32(token, 0));
}

}  // namespace addhash
