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

#include "addhash/datasets.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>

#include "addhash/textseg.hpp"

namespace addhash {
namespace {

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError("cannot open " + path.string());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) throw LoadError("read error in " + path.string());
  return lines;
}

LabeledDataset load_aligned(const std::filesystem::path& x_path,
                            const std::filesystem::path& y_path) {
  auto texts = read_lines(x_path);
  auto labels = read_lines(y_path);
  if (texts.size() != labels.size()) {
    throw LoadError("line count mismatch: " + x_path.string() + " has " +
                    std::to_string(texts.size()) + " lines, " + y_path.string() + " has " +
                    std::to_string(labels.size()));
  }
  std::vector<LabeledItem> items;
  items.reserve(texts.size());
  for (std::size_t i = 0; i < texts.size(); ++i) {
    items.push_back({std::move(texts[i]), std::move(labels[i])});
  }
  return LabeledDataset::from_items(std::move(items));
}

}  // namespace

LabeledDataset LabeledDataset::from_items(std::vector<LabeledItem> items) {
  std::set<std::string> distinct;
  for (const auto& it : items) distinct.insert(it.label);
  return {std::move(items), {distinct.begin(), distinct.end()}};
}

std::size_t LabeledDataset::count(const std::string& label) const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [&](const LabeledItem& it) { return it.label == label; }));
}

std::string gen_random_string(std::size_t length, Rng& rng) {
  if (length == 0) throw std::invalid_argument("gen_random_string: length must be >= 1");
  std::string s(length, 'a');
  for (auto& c : s) c = static_cast<char>('a' + rng.uniform_below(26));
  return s;
}

std::string perturb(std::string_view s, double p, Rng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("perturb: probability must lie in [0, 1]");
  }
  constexpr int kFirst = 33;
  constexpr int kLast = 126;
  std::string out;
  out.reserve(s.size());
  for (const auto cp : split_code_points(s)) {
    if (rng.uniform01() >= p) {
      out.append(cp);
      continue;
    }
    const int original = cp.size() == 1 ? static_cast<unsigned char>(cp[0]) : -1;
    const bool in_alphabet = original >= kFirst && original <= kLast;
    const auto choices = static_cast<std::uint64_t>(kLast - kFirst + 1 - (in_alphabet ? 1 : 0));
    int c = kFirst + static_cast<int>(rng.uniform_below(choices));
    if (in_alphabet && c >= original) ++c;  // skip over the original
    out.push_back(static_cast<char>(c));
  }
  return out;
}

TrainTest load_wili(const std::filesystem::path& dir) {
  return {load_aligned(dir / "x_train.txt", dir / "y_train.txt"),
          load_aligned(dir / "x_test.txt", dir / "y_test.txt")};
}

LabeledDataset wili_subset(const LabeledDataset& ds, std::size_t languages,
                           std::size_t per_class) {
  std::set<std::string> keep;
  for (const auto& c : ds.classes) {  // classes are sorted
    if (languages != 0 && keep.size() == languages) break;
    keep.insert(c);
  }
  std::map<std::string, std::size_t> taken;
  std::vector<LabeledItem> items;
  for (const auto& it : ds.items) {
    if (!keep.contains(it.label)) continue;
    auto& n = taken[it.label];
    if (per_class != 0 && n == per_class) continue;
    ++n;
    items.push_back(it);
  }
  return LabeledDataset::from_items(std::move(items));
}

LabeledDataset load_sms(const std::filesystem::path& path) {
  auto lines = read_lines(path);
  std::vector<LabeledItem> items;
  items.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    const auto where = path.string() + ":" + std::to_string(i + 1);
    const auto tab = line.find('\t');
    if (tab == std::string::npos) {
      // A single empty line at end of file is tolerated.
      if (line.empty() && i + 1 == lines.size()) break;
      throw LoadError(where + ": expected '<label>\\t<text>'");
    }
    auto label = line.substr(0, tab);
    if (label != "ham" && label != "spam") {
      throw LoadError(where + ": unknown label '" + label + "'");
    }
    items.push_back({line.substr(tab + 1), std::move(label)});
  }
  return LabeledDataset::from_items(std::move(items));
}

SplitIndices split_indices(std::size_t n, double fraction, Rng& rng) {
  if (!(fraction > 0.0 && fraction < 1.0)) {
    throw std::invalid_argument("split: fraction must lie in (0, 1)");
  }
  if (n == 0) throw std::invalid_argument("split: empty dataset");
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  // Fisher-Yates
  for (std::size_t i = n - 1; i > 0; --i) {
    std::swap(perm[i], perm[rng.uniform_below(i + 1)]);
  }
  const auto n_train =
      std::min(n, static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(n))));
  SplitIndices out;
  out.train.assign(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n_train));
  out.test.assign(perm.begin() + static_cast<std::ptrdiff_t>(n_train), perm.end());
  return out;
}

TrainTest split(const LabeledDataset& ds, double fraction, Rng& rng) {
  const auto idx = split_indices(ds.size(), fraction, rng);
  std::vector<LabeledItem> train, test;
  train.reserve(idx.train.size());
  test.reserve(idx.test.size());
  for (auto i : idx.train) train.push_back(ds.items[i]);
  for (auto i : idx.test) test.push_back(ds.items[i]);
  return {LabeledDataset::from_items(std::move(train)),
          LabeledDataset::from_items(std::move(test))};
}

}  // namespace addhash
