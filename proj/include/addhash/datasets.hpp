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
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "addhash/rng.hpp"

namespace addhash {

struct LabeledItem {
  std::string text;
  std::string label;

  friend bool operator==(const LabeledItem&, const LabeledItem&) = default;
};

struct LabeledDataset {
  std::vector<LabeledItem> items;
  std::vector<std::string> classes;  // distinct labels, sorted

  static LabeledDataset from_items(std::vector<LabeledItem> items);

  std::size_t size() const { return items.size(); }
  std::size_t count(const std::string& label) const;

  friend bool operator==(const LabeledDataset&, const LabeledDataset&) = default;
};

/// Raised for unreadable or malformed corpus files.
class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// M letters drawn uniformly from 'a'..'z'.
std::string gen_random_string(std::size_t length, Rng& rng);

/// Each code point is replaced with probability p by a printable ASCII
/// character (codes 33-126) other than itself. Length in code points is kept.
std::string perturb(std::string_view s, double p, Rng& rng);

struct TrainTest {
  LabeledDataset train;
  LabeledDataset test;

  friend bool operator==(const TrainTest&, const TrainTest&) = default;
};

/// Reads x_train.txt, y_train.txt, x_test.txt and y_test.txt from dir.
/// Texts and labels are aligned by line.
TrainTest load_wili(const std::filesystem::path& dir);

/// Keeps the first `languages` labels in lexicographic order and, for each,
/// its first `per_class` items in file order. Zero means no limit.
LabeledDataset wili_subset(const LabeledDataset& ds, std::size_t languages,
                           std::size_t per_class);

/// One record per line: "ham" or "spam", a tab, then the message.
LabeledDataset load_sms(const std::filesystem::path& path);

/// Random permutation of 0..n-1; the first ceil(fraction * n) entries are
/// the training positions.
struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};
SplitIndices split_indices(std::size_t n, double fraction, Rng& rng);

TrainTest split(const LabeledDataset& ds, double fraction, Rng& rng);

}  // namespace addhash
