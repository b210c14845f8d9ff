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

#include <cstdint>
#include <span>
#include <string_view>

namespace addhash {

// MurmurHash3, x86 32-bit variant (Austin Appleby's public-domain algorithm).
std::uint32_t murmur3_x86_32(std::span<const std::uint8_t> data, std::uint32_t seed);
std::uint32_t murmur3_x86_32(std::string_view data, std::uint32_t seed);

// Seed-0 hash of the token's UTF-8 bytes, reinterpreted as two's complement.
std::int32_t murmur32_signed(std::string_view token);

}  // namespace addhash
