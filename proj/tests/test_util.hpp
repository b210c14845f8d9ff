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

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace addhash::testing {

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("addhash_test_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }

  std::filesystem::path write(const std::string& name, const std::string& contents) const {
    const auto p = path_ / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p;
  }

 private:
  std::filesystem::path path_;
};

inline std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace addhash::testing

#include "addhash/datasets.hpp"

namespace addhash::testing {

// Pseudo-languages: each class draws words from its own syllable inventory,
// with a shared pool mixed in so classes overlap somewhat.
inline TrainTest make_language_corpus(std::size_t languages, std::size_t per_class,
                                      std::uint64_t seed) {
  Rng rng(seed);
  static const char* kShared[] = {"the", "ka", "lo", "mi", "an", "ro"};
  std::vector<std::vector<std::string>> syllables(languages);
  for (auto& inv : syllables) {
    for (int s = 0; s < 12; ++s) {
      std::string syl;
      const auto len = 2 + rng.uniform_below(2);
      for (std::uint64_t c = 0; c < len; ++c) syl += static_cast<char>('a' + rng.uniform_below(26));
      inv.push_back(syl);
    }
  }
  auto paragraph = [&](std::size_t lang) {
    std::string text;
    const auto words = 15 + rng.uniform_below(20);
    for (std::uint64_t w = 0; w < words; ++w) {
      if (w) text += ' ';
      const auto parts = 1 + rng.uniform_below(3);
      for (std::uint64_t p = 0; p < parts; ++p) {
        text += rng.uniform_below(5) == 0 ? kShared[rng.uniform_below(6)]
                                          : syllables[lang][rng.uniform_below(12)];
      }
    }
    return text;
  };
  auto make_split = [&] {
    std::vector<LabeledItem> items;
    for (std::size_t i = 0; i < per_class; ++i) {
      for (std::size_t lang = 0; lang < languages; ++lang) {
        items.push_back({paragraph(lang), "lang" + std::to_string(100 + lang)});
      }
    }
    return LabeledDataset::from_items(std::move(items));
  };
  auto train = make_split();
  auto test = make_split();
  return {std::move(train), std::move(test)};
}

// Ham and spam messages built from mostly disjoint phrase pools.
inline LabeledDataset make_sms_corpus(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  static const char* kHam[] = {"see you at lunch", "ok call me later", "how was the game",
                               "running late sorry", "love you mum", "what time is dinner",
                               "can you pick up milk", "i'll be home soon"};
  static const char* kSpam[] = {"WIN a FREE prize now", "URGENT claim your cash award",
                                "txt STOP to 87121", "you have won a 1000 GBP voucher",
                                "call 09061701461 to claim", "FREE entry in 2 a wkly comp"};
  std::vector<LabeledItem> items;
  for (std::size_t i = 0; i < n; ++i) {
    const bool spam = rng.uniform_below(7) == 0;
    std::string text;
    const auto parts = 1 + rng.uniform_below(3);
    for (std::uint64_t p = 0; p < parts; ++p) {
      if (p) text += ' ';
      text += spam ? kSpam[rng.uniform_below(6)] : kHam[rng.uniform_below(8)];
    }
    items.push_back({text, spam ? "spam" : "ham"});
  }
  return LabeledDataset::from_items(std::move(items));
}

inline void write_wili_dir(const std::filesystem::path& dir, const TrainTest& data) {
  auto dump = [&](const LabeledDataset& ds, const std::string& x, const std::string& y) {
    std::ofstream xs(dir / x, std::ios::binary), ys(dir / y, std::ios::binary);
    for (const auto& it : ds.items) {
      xs << it.text << '\n';
      ys << it.label << '\n';
    }
  };
  dump(data.train, "x_train.txt", "y_train.txt");
  dump(data.test, "x_test.txt", "y_test.txt");
}

inline void write_sms_file(const std::filesystem::path& path, const LabeledDataset& ds) {
  std::ofstream out(path, std::ios::binary);
  for (const auto& it : ds.items) out << it.label << '\t' << it.text << '\n';
}

}  // namespace addhash::testing
