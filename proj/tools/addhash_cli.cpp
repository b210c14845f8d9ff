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

// addhash_cli: feature-hashing experiments and one-off encodings.
//
//   addhash_cli synthetic --dims 7,8,9,10 --trials 100 --out synthetic.csv
//   addhash_cli wili --data wili-2018/ --dims 4-12
//   addhash_cli sms --data SMSSpamCollection --dims 12 --trials 20
//   addhash_cli encode --method ah --dims 5 "some text"
//   addhash_cli similarity --method ht --tokens normalized --dims 5 "a b" "c d"
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>
#include <fmt/format.h>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "addhash/datasets.hpp"
#include "addhash/experiments.hpp"
#include "addhash/result_io.hpp"
#include "addhash/textseg.hpp"

namespace {

using namespace addhash;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// "7,8,9,10" or "4-12" or a mix such as "4-6,10".
std::vector<int> parse_exponents(const std::string& spec) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string part;
  auto to_int = [&](const std::string& s) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw UsageError("bad --dims entry '" + s + "'");
    }
  };
  while (std::getline(ss, part, ',')) {
    const auto dash = part.find('-', 1);
    if (dash == std::string::npos) {
      out.push_back(to_int(part));
      continue;
    }
    const int lo = to_int(part.substr(0, dash));
    const int hi = to_int(part.substr(dash + 1));
    if (hi < lo) throw UsageError("bad --dims range '" + part + "'");
    for (int e = lo; e <= hi; ++e) out.push_back(e);
  }
  if (out.empty()) throw UsageError("--dims is empty");
  return out;
}

struct CommonOptions {
  std::string method;  // empty = default for the subcommand
  std::size_t ngram = 3;
  std::string dims;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  std::string data;
  std::string out;
  std::string format = "csv";
  bool lowercase = false;
  std::size_t languages = 20;
  std::size_t per_class = 100;
  bool full = false;
  unsigned threads = 0;
  std::string tokens = "ngram";
  std::vector<std::string> texts;
};

void add_method(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--method", o.method, "ah | ht | ht-unsigned");
}
void add_output(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--out", o.out, "Output file (default: standard output)");
  cmd->add_option("--format", o.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}
void add_tokenizer(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--ngram", o.ngram, "Character n-gram length")->capture_default_str();
  cmd->add_flag("--lowercase", o.lowercase, "Lowercase text before extracting n-grams");
}
void add_experiment(CLI::App* cmd, CommonOptions& o, const std::string& default_dims) {
  o.dims = default_dims;
  add_method(cmd, o);
  add_tokenizer(cmd, o);
  add_output(cmd, o);
  cmd->add_option("--dims", o.dims, "Dimension exponents l, L = 2^l (e.g. 7,8,9,10 or 4-12)")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Base seed; trial t uses seed + t")->capture_default_str();
  cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
}

ExperimentConfig make_config(const CommonOptions& o) {
  ExperimentConfig cfg;
  if (!o.method.empty()) cfg.methods = {parse_method(o.method)};
  cfg.ngram = o.ngram;
  cfg.dim_exponents = parse_exponents(o.dims);
  cfg.trials = o.trials;
  cfg.seed = o.seed;
  cfg.data = o.data;
  cfg.lowercase = o.lowercase;
  cfg.languages = o.languages;
  cfg.per_class = o.per_class;
  cfg.full = o.full;
  cfg.threads = o.threads;
  return cfg;
}

TokenSequence tokenize_for_cli(const std::string& text, const CommonOptions& o) {
  TokenizerSpec spec;
  if (o.tokens == "ngram") {
    spec = {TokenMode::CharNGram, o.ngram, o.lowercase};
  } else if (o.tokens == "words") {
    spec = {TokenMode::WordSplit, o.ngram, o.lowercase};
  } else {
    spec = {TokenMode::NormalizedWord, o.ngram, true};
  }
  return tokenize(text, spec);
}

std::size_t single_dim(const CommonOptions& o) {
  const auto exps = parse_exponents(o.dims);
  if (exps.size() != 1) throw UsageError("this subcommand takes exactly one --dims exponent");
  ExperimentConfig probe;
  probe.methods = {parse_method(o.method.empty() ? "ah" : o.method)};
  probe.dim_exponents = exps;
  probe.validate();
  return std::size_t{1} << exps[0];
}

template <typename Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw LoadError("cannot write " + path);
  fn(file);
  if (!file) throw LoadError("write failed for " + path);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feature hashing: additive hashing and the hashing trick"};
  app.require_subcommand(1);
  // One option block per subcommand so defaults never leak between them.
  CommonOptions syn_o, wili_o, sms_o, enc_o, sim_o;

  auto* synthetic = app.add_subcommand("synthetic", "Similarity of random strings vs. perturbation p");
  add_experiment(synthetic, syn_o, "7,8,9,10");
  synthetic->add_option("--trials", syn_o.trials, "Strings per p")->capture_default_str();

  auto* wili = app.add_subcommand("wili", "WiLI-2018 language identification");
  add_experiment(wili, wili_o, "4-12");
  wili->add_option("--data", wili_o.data, "Directory with x_train.txt, y_train.txt, x_test.txt, y_test.txt")
      ->required();
  wili->add_option("--subset-languages", wili_o.languages, "Languages kept in desk-scale runs")
      ->capture_default_str();
  wili->add_option("--per-class", wili_o.per_class, "Paragraphs per language and split")
      ->capture_default_str();
  wili->add_flag("--full", wili_o.full, "Use the whole corpus (very long)");

  auto* sms = app.add_subcommand("sms", "SMS spam filtering");
  add_experiment(sms, sms_o, "4-13");
  sms->add_option("--data", sms_o.data, "Corpus file: label<TAB>text per line")->required();
  sms->add_option("--trials", sms_o.trials, "Random 50/50 splits")->capture_default_str();

  auto add_text_command = [&](const char* name, const char* help, CommonOptions& o,
                              std::size_t n_texts) {
    auto* cmd = app.add_subcommand(name, help);
    o.dims = "10";
    add_method(cmd, o);
    add_tokenizer(cmd, o);
    cmd->add_option("--dims", o.dims, "Dimension exponent l, L = 2^l");
    cmd->add_option("--tokens", o.tokens, "ngram | words | normalized")
        ->check(CLI::IsMember({"ngram", "words", "normalized"}));
    cmd->add_option("texts", o.texts, "Document text")->expected(static_cast<int>(n_texts));
    return cmd;
  };
  auto* encode_cmd = add_text_command("encode", "Encode one document (or stdin) as a vector", enc_o, 1);
  add_output(encode_cmd, enc_o);
  auto* similarity = add_text_command("similarity", "Cosine similarity of two documents", sim_o, 2);
  similarity->get_option("texts")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*synthetic) {
      const auto& o = syn_o;
      const auto format = parse_format(o.format);
      auto cfg = make_config(o);
      // AH always runs beside one hashing-trick variant.
      const auto ht = o.method == "ht-unsigned" ? Method::HtUnsigned : Method::HtSigned;
      cfg.methods = {Method::AH, ht};
      const auto rows = run_synthetic(cfg);
      with_output(o.out, [&](std::ostream& out) { write_rows(out, rows, format); });
    } else if (*wili) {
      const auto& o = wili_o;
      const auto format = parse_format(o.format);
      const auto cfg = make_config(o);
      if (cfg.full) {
        std::cerr << "warning: --full classifies all 117,500 test paragraphs against "
                     "117,500 training vectors per dimension; expect a very long run\n";
      }
      const auto rows = run_wili(cfg);
      with_output(o.out, [&](std::ostream& out) { write_rows(out, rows, format); });
    } else if (*sms) {
      const auto& o = sms_o;
      const auto format = parse_format(o.format);
      const auto rows = run_sms(make_config(o));
      with_output(o.out, [&](std::ostream& out) { write_rows(out, rows, format); });
    } else if (*encode_cmd) {
      const auto& o = enc_o;
      const auto format = parse_format(o.format);
      const auto dim = single_dim(o);
      std::string text;
      if (o.texts.empty()) {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
      } else {
        text = o.texts[0];
      }
      const auto method = parse_method(o.method.empty() ? "ah" : o.method);
      const auto v = encode(tokenize_for_cli(text, o), method, dim);
      with_output(o.out, [&](std::ostream& out) { write_vector(out, v, format); });
    } else if (*similarity) {
      const auto& o = sim_o;
      const auto dim = single_dim(o);
      const auto method = parse_method(o.method.empty() ? "ah" : o.method);
      const auto a = encode(tokenize_for_cli(o.texts[0], o), method, dim);
      const auto b = encode(tokenize_for_cli(o.texts[1], o), method, dim);
      std::cout << fmt::format("{}\n", cosine(a, b));
    }
  } catch (const LoadError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
