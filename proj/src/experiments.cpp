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

#include "addhash/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <thread>
#include <tuple>

#include "addhash/addhash.hpp"
#include "addhash/classify.hpp"
#include "addhash/hashtrick.hpp"

namespace addhash {
namespace {

constexpr int kMaxExponent = 24;

// Runs fn(i) for i in [0, n) on up to `threads` workers. Callers write
// results into per-index slots, so scheduling never affects output.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < n; i += threads) fn(i);
    });
  }
}

std::vector<FeatureVector> encode_all(const LabeledDataset& ds, const TokenizerSpec& spec,
                                      Method method, std::size_t dim, unsigned threads) {
  std::vector<FeatureVector> out(ds.size());
  parallel_for(ds.size(), threads, [&](std::size_t i) {
    out[i] = encode(tokenize(ds.items[i].text, spec), method, dim);
  });
  return out;
}

}  // namespace

std::string_view method_name(Method m) {
  switch (m) {
    case Method::AH:
      return "ah";
    case Method::HtSigned:
      return "ht";
    case Method::HtUnsigned:
      return "ht-unsigned";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "ah") return Method::AH;
  if (name == "ht") return Method::HtSigned;
  if (name == "ht-unsigned") return Method::HtUnsigned;
  throw UsageError("unknown method '" + std::string(name) + "' (expected ah, ht or ht-unsigned)");
}

FeatureVector encode_raw(const TokenSequence& tokens, Method method, std::size_t dim) {
  if (method == Method::AH) return ah_raw(tokens, RandomizerConfig{dim});
  return ht_accumulate(tokens, HashTrickConfig{dim, method == Method::HtSigned});
}

FeatureVector encode(const TokenSequence& tokens, Method method, std::size_t dim) {
  return l2_normalize(encode_raw(tokens, method, dim));
}

std::vector<double> ExperimentConfig::default_p_grid() {
  std::vector<double> grid;
  for (int i = 0; i <= 20; ++i) grid.push_back(i / 20.0);
  return grid;
}

TokenizerSpec ExperimentConfig::tokenizer() const {
  return {TokenMode::CharNGram, ngram, lowercase};
}

std::vector<std::size_t> ExperimentConfig::dims() const {
  std::vector<std::size_t> out;
  for (int e : dim_exponents) out.push_back(std::size_t{1} << e);
  return out;
}

void ExperimentConfig::validate() const {
  if (methods.empty()) throw UsageError("no method selected");
  if (ngram == 0) throw UsageError("--ngram must be >= 1");
  if (trials == 0) throw UsageError("--trials must be >= 1");
  if (dim_exponents.empty()) throw UsageError("--dims must list at least one exponent");
  const bool uses_ah = std::find(methods.begin(), methods.end(), Method::AH) != methods.end();
  for (int e : dim_exponents) {
    if (e < 0 || e > kMaxExponent) {
      throw UsageError("dimension exponent " + std::to_string(e) + " outside [0, " +
                       std::to_string(kMaxExponent) + "]");
    }
    if (uses_ah && e < 3) {
      throw UsageError("additive hashing needs L = 2^l divisible by 8 (l >= 3), got l = " +
                       std::to_string(e));
    }
  }
  if (string_length == 0) throw UsageError("string length must be >= 1");
  for (double p : p_grid) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("perturbation probability outside [0, 1]");
  }
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw UsageError("train fraction must lie in (0, 1)");
  }
}

void sort_rows(std::vector<ResultRow>& rows) {
  std::stable_sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    const double pa = a.p.value_or(-1.0);
    const double pb = b.p.value_or(-1.0);
    return std::tie(a.experiment, a.method, a.dim, pa, a.metric) <
           std::tie(b.experiment, b.method, b.dim, pb, b.metric);
  });
}

std::vector<ResultRow> run_synthetic(const ExperimentConfig& cfg) {
  cfg.validate();
  const auto dims = cfg.dims();
  const auto spec = cfg.tokenizer();
  const std::size_t per_trial = dims.size() * cfg.methods.size();

  std::vector<ResultRow> rows;
  for (double p : cfg.p_grid) {
    // sims[t * per_trial + d * methods + m]
    std::vector<double> sims(cfg.trials * per_trial);
    parallel_for(cfg.trials, cfg.threads, [&](std::size_t t) {
      Rng rng(cfg.seed + t);
      const auto base = gen_random_string(cfg.string_length, rng);
      const auto altered = perturb(base, p, rng);
      const auto base_tokens = tokenize(base, spec);
      const auto altered_tokens = tokenize(altered, spec);
      for (std::size_t d = 0; d < dims.size(); ++d) {
        for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
          sims[t * per_trial + d * cfg.methods.size() + m] =
              angle_cosine(encode_raw(base_tokens, cfg.methods[m], dims[d]),
                           encode_raw(altered_tokens, cfg.methods[m], dims[d]));
        }
      }
    });
    for (std::size_t d = 0; d < dims.size(); ++d) {
      for (std::size_t m = 0; m < cfg.methods.size(); ++m) {
        double sum = 0.0;
        for (std::size_t t = 0; t < cfg.trials; ++t) {
          sum += sims[t * per_trial + d * cfg.methods.size() + m];
        }
        rows.push_back({"synthetic", std::string(method_name(cfg.methods[m])), cfg.ngram,
                        dims[d], p, "similarity", sum / static_cast<double>(cfg.trials),
                        cfg.trials, cfg.seed});
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> run_wili(const ExperimentConfig& cfg, const TrainTest& data) {
  cfg.validate();
  if (data.train.size() == 0 || data.test.size() == 0) {
    throw LoadError("wili: empty train or test split");
  }
  const auto spec = cfg.tokenizer();
  std::vector<ResultRow> rows;
  for (const auto method : cfg.methods) {
    for (const auto dim : cfg.dims()) {
      VectorIndex index(dim);
      {
        auto train = encode_all(data.train, spec, method, dim, cfg.threads);
        for (std::size_t i = 0; i < train.size(); ++i) {
          index.add(train[i], data.train.items[i].label);
        }
      }
      const auto test = encode_all(data.test, spec, method, dim, cfg.threads);
      const auto predicted = classify_batch(test, index, cfg.threads);
      std::size_t correct = 0;
      for (std::size_t i = 0; i < test.size(); ++i) {
        if (predicted[i].label == data.test.items[i].label) ++correct;
      }
      rows.push_back({"wili", std::string(method_name(method)), cfg.ngram, dim, std::nullopt,
                      "acc", static_cast<double>(correct) / static_cast<double>(test.size()), 1,
                      cfg.seed});
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> run_wili(const ExperimentConfig& cfg) {
  cfg.validate();
  auto data = load_wili(cfg.data);
  if (!cfg.full) {
    data.train = wili_subset(data.train, cfg.languages, cfg.per_class);
    data.test = wili_subset(data.test, cfg.languages, cfg.per_class);
  }
  return run_wili(cfg, data);
}

std::vector<ResultRow> run_sms(const ExperimentConfig& cfg, const LabeledDataset& corpus) {
  cfg.validate();
  if (corpus.size() < 2) throw LoadError("sms: corpus needs at least two messages");
  const auto spec = cfg.tokenizer();
  std::vector<ResultRow> rows;
  for (const auto method : cfg.methods) {
    for (const auto dim : cfg.dims()) {
      const auto vectors = encode_all(corpus, spec, method, dim, cfg.threads);
      const ScoreMatrix scores(vectors);

      double acc = 0.0, sc = 0.0, bh = 0.0;
      std::size_t sc_trials = 0, bh_trials = 0;
      for (std::size_t t = 0; t < cfg.trials; ++t) {
        Rng rng(cfg.seed + t);
        const auto idx = split_indices(corpus.size(), cfg.train_fraction, rng);
        if (idx.test.empty()) throw UsageError("sms: split leaves no test messages");
        std::vector<std::string> predicted, truth;
        predicted.reserve(idx.test.size());
        truth.reserve(idx.test.size());
        for (const auto q : idx.test) {
          const auto nearest = idx.train[scores.nearest(q, idx.train)];
          predicted.push_back(corpus.items[nearest].label);
          truth.push_back(corpus.items[q].label);
        }
        const auto m = spam_metrics(predicted, truth);
        acc += m.acc;
        if (m.sc_defined) {
          sc += m.sc;
          ++sc_trials;
        }
        if (m.bh_defined) {
          bh += m.bh;
          ++bh_trials;
        }
      }
      const auto name = std::string(method_name(method));
      rows.push_back({"sms", name, cfg.ngram, dim, std::nullopt, "acc",
                      acc / static_cast<double>(cfg.trials), cfg.trials, cfg.seed});
      // Rows stay finite: a metric undefined in every trial is omitted.
      if (sc_trials > 0) {
        rows.push_back({"sms", name, cfg.ngram, dim, std::nullopt, "sc",
                        sc / static_cast<double>(sc_trials), sc_trials, cfg.seed});
      }
      if (bh_trials > 0) {
        rows.push_back({"sms", name, cfg.ngram, dim, std::nullopt, "bh",
                        bh / static_cast<double>(bh_trials), bh_trials, cfg.seed});
      }
    }
  }
  sort_rows(rows);
  return rows;
}

std::vector<ResultRow> run_sms(const ExperimentConfig& cfg) {
  cfg.validate();
  return run_sms(cfg, load_sms(cfg.data));
}

}  // namespace addhash
