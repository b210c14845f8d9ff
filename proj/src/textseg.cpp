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

#include "addhash/textseg.hpp"

#include <locale.h>
#include <wctype.h>

#include <stdexcept>

namespace addhash {
namespace {

struct Decoded {
  char32_t cp;
  std::size_t len;
};

constexpr char32_t kInvalid = 0xFFFD;

Decoded decode_one(std::string_view s, std::size_t pos) {
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return {b0, 1};
  std::size_t len;
  char32_t cp;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {kInvalid, 1};
  }
  if (pos + len > s.size()) return {kInvalid, 1};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return {kInvalid, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  // Reject overlong forms and surrogates.
  static constexpr char32_t kMin[] = {0, 0, 0x80, 0x800, 0x10000};
  if (cp < kMin[len] || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
    return {kInvalid, 1};
  }
  return {cp, len};
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Character classes come from the C.UTF-8 locale when the system has it.
// Without it only ASCII is classified and lowercased.
class UnicodeCType {
 public:
  UnicodeCType() {
    loc_ = newlocale(LC_CTYPE_MASK, "C.UTF-8", static_cast<locale_t>(0));
  }
  ~UnicodeCType() {
    if (loc_ != static_cast<locale_t>(0)) freelocale(loc_);
  }
  UnicodeCType(const UnicodeCType&) = delete;
  UnicodeCType& operator=(const UnicodeCType&) = delete;

  char32_t lower(char32_t cp) const {
    if (cp < 0x80) return (cp >= 'A' && cp <= 'Z') ? cp + 32 : cp;
    if (loc_ == static_cast<locale_t>(0)) return cp;
    return static_cast<char32_t>(towlower_l(static_cast<wint_t>(cp), loc_));
  }

  bool is_word(char32_t cp) const {
    if (cp < 0x80) {
      return (cp >= 'a' && cp <= 'z') || (cp >= 'A' && cp <= 'Z') ||
             (cp >= '0' && cp <= '9') || cp == '_';
    }
    if (cp == kInvalid || loc_ == static_cast<locale_t>(0)) return false;
    return iswalnum_l(static_cast<wint_t>(cp), loc_) != 0;
  }

 private:
  locale_t loc_;
};

const UnicodeCType& ctype() {
  static const UnicodeCType instance;
  return instance;
}

}  // namespace

void TokenizerSpec::validate() const {
  if (mode == TokenMode::CharNGram && n == 0) {
    throw std::invalid_argument("n-gram length must be at least 1");
  }
}

std::vector<std::string_view> split_code_points(std::string_view text) {
  std::vector<std::string_view> out;
  out.reserve(text.size());
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = decode_one(text, pos);
    out.push_back(text.substr(pos, d.len));
    pos += d.len;
  }
  return out;
}

std::size_t code_point_count(std::string_view text) {
  std::size_t count = 0;
  for (std::size_t pos = 0; pos < text.size(); ++count) {
    pos += decode_one(text, pos).len;
  }
  return count;
}

std::string to_lower(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  const auto& ct = ctype();
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = decode_one(text, pos);
    if (d.cp == kInvalid && d.len == 1) {
      out.append(text.substr(pos, 1));
    } else {
      append_utf8(out, ct.lower(d.cp));
    }
    pos += d.len;
  }
  return out;
}

TokenSequence tokenize_words(std::string_view text) {
  TokenSequence tokens;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(' ', start);
    if (end == std::string_view::npos) end = text.size();
    if (end > start) tokens.emplace_back(text.substr(start, end - start));
    start = end + 1;
  }
  return tokens;
}

TokenSequence tokenize_normalized(std::string_view text) {
  const auto& ct = ctype();
  TokenSequence tokens;
  std::string current;
  std::size_t run = 0;
  auto flush = [&] {
    if (run >= 2) tokens.push_back(current);
    current.clear();
    run = 0;
  };
  for (std::size_t pos = 0; pos < text.size();) {
    const auto d = decode_one(text, pos);
    pos += d.len;
    if (ct.is_word(d.cp)) {
      append_utf8(current, ct.lower(d.cp));
      ++run;
    } else {
      flush();
    }
  }
  flush();
  return tokens;
}

TokenSequence char_ngrams(std::string_view text, std::size_t n) {
  if (n == 0) throw std::invalid_argument("n-gram length must be at least 1");
  // Byte offsets of each code point plus the end sentinel.
  std::vector<std::size_t> offsets;
  offsets.reserve(text.size() + 1);
  for (std::size_t pos = 0; pos < text.size();) {
    offsets.push_back(pos);
    pos += decode_one(text, pos).len;
  }
  offsets.push_back(text.size());
  const std::size_t count = offsets.size() - 1;
  TokenSequence grams;
  if (count < n) return grams;
  grams.reserve(count - n + 1);
  for (std::size_t i = 0; i + n <= count; ++i) {
    grams.emplace_back(text.substr(offsets[i], offsets[i + n] - offsets[i]));
  }
  return grams;
}

TokenSequence tokenize(std::string_view text, const TokenizerSpec& spec) {
  spec.validate();
  if (spec.mode == TokenMode::NormalizedWord) return tokenize_normalized(text);
  if (spec.lowercase) {
    const auto lowered = to_lower(text);
    return spec.mode == TokenMode::WordSplit ? tokenize_words(lowered)
                                             : char_ngrams(lowered, spec.n);
  }
  return spec.mode == TokenMode::WordSplit ? tokenize_words(text)
                                           : char_ngrams(text, spec.n);
}

}  // namespace addhash
