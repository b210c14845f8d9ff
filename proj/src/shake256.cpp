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

#include "addhash/shake256.hpp"

#include <bit>
#include <stdexcept>

namespace addhash {
namespace {

constexpr std::array<std::uint64_t, 24> kRoundConstants = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL};

// Rho offsets and pi destinations along the lane walk starting at (1, 0).
constexpr std::array<int, 24> kRho = {1,  3,  6,  10, 15, 21, 28, 36,
                                      45, 55, 2,  14, 27, 41, 56, 8,
                                      25, 43, 62, 18, 39, 61, 20, 44};
constexpr std::array<int, 24> kPi = {10, 7,  11, 17, 18, 3,  5,  16,
                                     8,  21, 24, 4,  15, 23, 19, 13,
                                     12, 2,  20, 14, 22, 9,  6,  1};

constexpr std::uint8_t kShakeSuffix = 0x1F;

// State lanes are little-endian byte sequences.
inline void xor_byte(std::array<std::uint64_t, 25>& st, std::size_t i, std::uint8_t b) {
  st[i / 8] ^= std::uint64_t(b) << (8 * (i % 8));
}

inline std::uint8_t get_byte(const std::array<std::uint64_t, 25>& st, std::size_t i) {
  return static_cast<std::uint8_t>(st[i / 8] >> (8 * (i % 8)));
}

}  // namespace

void keccak_f1600(std::array<std::uint64_t, 25>& st) {
  std::array<std::uint64_t, 5> bc{};
  for (const auto rc : kRoundConstants) {
    // theta
    for (int i = 0; i < 5; ++i) {
      bc[i] = st[i] ^ st[i + 5] ^ st[i + 10] ^ st[i + 15] ^ st[i + 20];
    }
    for (int i = 0; i < 5; ++i) {
      const std::uint64_t t = bc[(i + 4) % 5] ^ std::rotl(bc[(i + 1) % 5], 1);
      for (int j = 0; j < 25; j += 5) st[j + i] ^= t;
    }
    // rho and pi
    std::uint64_t t = st[1];
    for (int i = 0; i < 24; ++i) {
      const int j = kPi[i];
      const std::uint64_t next = st[j];
      st[j] = std::rotl(t, kRho[i]);
      t = next;
    }
    // chi
    for (int j = 0; j < 25; j += 5) {
      for (int i = 0; i < 5; ++i) bc[i] = st[j + i];
      for (int i = 0; i < 5; ++i) st[j + i] ^= (~bc[(i + 1) % 5]) & bc[(i + 2) % 5];
    }
    // iota
    st[0] ^= rc;
  }
}

void Shake256::reset() {
  state_.fill(0);
  pos_ = 0;
  squeezing_ = false;
}

void Shake256::absorb(std::span<const std::uint8_t> data) {
  if (squeezing_) throw std::logic_error("Shake256: absorb after squeeze");
  for (const auto b : data) {
    xor_byte(state_, pos_++, b);
    if (pos_ == kRateBytes) {
      keccak_f1600(state_);
      pos_ = 0;
    }
  }
}

void Shake256::absorb(std::string_view data) {
  absorb(std::span(reinterpret_cast<const std::uint8_t*>(data.data()), data.size()));
}

void Shake256::finalize() {
  xor_byte(state_, pos_, kShakeSuffix);
  xor_byte(state_, kRateBytes - 1, 0x80);
  keccak_f1600(state_);
  pos_ = 0;
  squeezing_ = true;
}

void Shake256::squeeze(std::span<std::uint8_t> out) {
  if (!squeezing_) finalize();
  for (auto& b : out) {
    if (pos_ == kRateBytes) {
      keccak_f1600(state_);
      pos_ = 0;
    }
    b = get_byte(state_, pos_++);
  }
}

std::vector<std::uint8_t> shake256(std::string_view data, std::size_t out_len) {
  Shake256 xof;
  xof.absorb(data);
  std::vector<std::uint8_t> out(out_len);
  xof.squeeze(out);
  return out;
}

}  // namespace addhash
