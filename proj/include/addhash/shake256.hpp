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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace addhash {

/// SHAKE-256 extendable-output function (FIPS 202), incremental interface.
///
/// Absorb any number of times, then squeeze any number of times. Absorbing
/// after the first squeeze throws std::logic_error.
class Shake256 {
 public:
  static constexpr std::size_t kRateBytes = 136;

  Shake256() { reset(); }

  void reset();
  void absorb(std::span<const std::uint8_t> data);
  void absorb(std::string_view data);
  void squeeze(std::span<std::uint8_t> out);

 private:
  void finalize();

  std::array<std::uint64_t, 25> state_{};
  std::size_t pos_ = 0;  // byte offset into the rate portion
  bool squeezing_ = false;
};

std::vector<std::uint8_t> shake256(std::string_view data, std::size_t out_len);

// The Keccak-f[1600] permutation, exposed for testing.
void keccak_f1600(std::array<std::uint64_t, 25>& state);

}  // namespace addhash
