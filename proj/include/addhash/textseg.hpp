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
#include <string>
#include <string_view>
#include <vector>

namespace addhash {

// Tokens are UTF-8 encoded strings; a TokenSequence never holds empty tokens.
using TokenSequence = std::vector<std::string>;

enum class TokenMode { WordSplit, NormalizedWord, CharNGram };

struct TokenizerSpec {
  TokenMode mode = TokenMode::CharNGram;
  std::size_t n = 3;  // only read in CharNGram mode
  bool lowercase = false;

  void validate() const;
};

/// Splits on the ASCII space character and drops empty runs.
TokenSequence tokenize_words(std::string_view text);

/// Lowercases per code point and keeps runs of word characters
/// (letters, digits, underscore) that are at least two code points long.
/// This is the token rule of the common hashing vectorizers.
TokenSequence tokenize_normalized(std::string_view text);

/// Sliding window of all n-code-point substrings. Text shorter than n
/// yields nothing. Throws std::invalid_argument for n == 0.
TokenSequence char_ngrams(std::string_view text, std::size_t n);

/// Dispatches on spec.mode. When spec.lowercase is set the text is
/// lowercased first (NormalizedWord always lowercases).
TokenSequence tokenize(std::string_view text, const TokenizerSpec& spec);

// UTF-8 helpers. Malformed bytes are carried through as single units so
// arbitrary input never throws.
std::vector<std::string_view> split_code_points(std::string_view text);
std::size_t code_point_count(std::string_view text);
std::string to_lower(std::string_view text);

}  // namespace addhash
