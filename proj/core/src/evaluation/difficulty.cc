// Copyright (c) 2026 twistgen contributors
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

#include "twistgen/evaluation/difficulty.h"

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/rng.h"

namespace twistgen {

namespace {

const std::set<std::string>& Sibilants() {
  static const std::set<std::string> kSibilants = {"s",  "z",  "ʃ", "ʒ",
                                                   "tʃ", "dʒ", "θ", "ð"};
  return kSibilants;
}

}  // namespace

void DifficultyConfig::Validate() const {
  if (hash_dim <= 0) throw ConfigError("difficulty: hash_dim must be > 0");
  if (max_ngram < 1) throw ConfigError("difficulty: max_ngram must be >= 1");
  logistic.Validate();
}

DifficultyClassifier::DifficultyClassifier(const PhonemeInventory* inventory,
                                           DifficultyConfig config)
    : inventory_(inventory), config_(std::move(config)) {
  if (inventory_ == nullptr) {
    throw ConfigError("difficulty classifier requires a phoneme inventory");
  }
  config_.Validate();
}

std::array<double, DifficultyClassifier::kNumPhoneticFeatures>
DifficultyClassifier::PhoneticFeatures(const PhonemeSequence& phonemes) {
  std::vector<std::string> onsets;
  std::vector<std::string> symbols;
  for (const PhonemeSequence::Word& word : phonemes.words) {
    if (!word.symbols.empty()) onsets.push_back(word.symbols.front());
    symbols.insert(symbols.end(), word.symbols.begin(), word.symbols.end());
  }
  const std::size_t n = onsets.size();

  double onset_repetition = 0.0;
  if (n > 1) {
    int adjacent_equal = 0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (onsets[i] == onsets[i + 1]) ++adjacent_equal;
    }
    onset_repetition = static_cast<double>(adjacent_equal) / (n - 1);
  }

  double onset_diversity = 0.0;
  if (n > 0) {
    std::set<std::string> distinct(onsets.begin(), onsets.end());
    onset_diversity = static_cast<double>(distinct.size()) / n;
  }

  double symbol_repetition = 0.0;
  double sibilant_rate = 0.0;
  if (!symbols.empty()) {
    std::set<std::string> distinct(symbols.begin(), symbols.end());
    symbol_repetition =
        1.0 - static_cast<double>(distinct.size()) / symbols.size();
    int sibilant_count = 0;
    for (const std::string& s : symbols) {
      if (Sibilants().count(s) > 0) ++sibilant_count;
    }
    sibilant_rate = static_cast<double>(sibilant_count) / symbols.size();
  }

  double onset_run = 0.0;
  if (n > 0) {
    int best = 1, run = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      run = onsets[i] == onsets[i + 1] ? run + 1 : 1;
      best = std::max(best, run);
    }
    onset_run = static_cast<double>(best) / n;
  }

  return {onset_repetition, onset_diversity, symbol_repetition, sibilant_rate,
          onset_run};
}

SparseFeatures DifficultyClassifier::Featurize(
    const PhonemeSequence& phonemes) const {
  std::map<int, double> counts;
  double total_ngrams = 0.0;
  for (const PhonemeSequence::Word& word : phonemes.words) {
    const std::vector<std::string>& syms = word.symbols;
    for (int n = 1; n <= config_.max_ngram; ++n) {
      if (syms.size() < static_cast<std::size_t>(n)) break;
      for (std::size_t i = 0; i + n <= syms.size(); ++i) {
        std::string key = std::to_string(n) + "|" + syms[i];
        for (int j = 1; j < n; ++j) key += " " + syms[i + j];
        uint64_t slot = Fnv1a64(key) % static_cast<uint64_t>(config_.hash_dim);
        counts[static_cast<int>(slot)] += 1.0;
        total_ngrams += 1.0;
      }
    }
  }
  if (total_ngrams > 0.0) {
    for (auto& [index, count] : counts) count /= total_ngrams;
  }
  std::array<double, kNumPhoneticFeatures> engineered =
      PhoneticFeatures(phonemes);
  for (int i = 0; i < kNumPhoneticFeatures; ++i) {
    if (engineered[i] != 0.0) counts[config_.hash_dim + i] = engineered[i];
  }
  return SparseFeatures(counts.begin(), counts.end());
}

void DifficultyClassifier::Train(const ClassifierDataset& dataset) {
  std::vector<SparseFeatures> train_features;
  std::vector<int> train_labels;
  std::vector<SparseFeatures> test_features;
  std::vector<int> test_labels;
  for (const LabeledPhonemes& item : dataset.items) {
    if (item.split != Split::kTrain && item.split != Split::kTest) continue;
    PhonemeSequence seq = PhonemeSequence::Parse(item.phonemes, *inventory_);
    SparseFeatures features = Featurize(seq);
    if (item.split == Split::kTrain) {
      train_features.push_back(std::move(features));
      train_labels.push_back(item.label);
    } else {
      test_features.push_back(std::move(features));
      test_labels.push_back(item.label);
    }
  }
  if (train_features.empty()) {
    throw DataError("difficulty training: no train-split items");
  }
  model_.emplace(feature_dim(), config_.logistic);
  model_->Train(train_features, train_labels);

  eval_summary_ = DifficultyEvalSummary();
  eval_summary_.test_items = static_cast<int>(test_features.size());
  if (!test_features.empty()) {
    std::vector<int> predicted;
    predicted.reserve(test_features.size());
    double positive_sum = 0.0, negative_sum = 0.0;
    int positive_n = 0, negative_n = 0;
    for (std::size_t i = 0; i < test_features.size(); ++i) {
      double p = model_->Probability(test_features[i]);
      predicted.push_back(p >= 0.5 ? 1 : 0);
      if (test_labels[i] == 1) {
        positive_sum += p;
        ++positive_n;
      } else {
        negative_sum += p;
        ++negative_n;
      }
    }
    eval_summary_.positive = PositiveClassF1(test_labels, predicted);
    eval_summary_.macro_f1 = MacroF1(test_labels, predicted);
    if (positive_n > 0) {
      eval_summary_.mean_positive_score = positive_sum / positive_n;
    }
    if (negative_n > 0) {
      eval_summary_.mean_negative_score = negative_sum / negative_n;
    }
  }
}

double DifficultyClassifier::Score(std::string_view rendered_phonemes) const {
  return ScoreSequence(
      PhonemeSequence::Parse(rendered_phonemes, *inventory_));
}

double DifficultyClassifier::ScoreSequence(
    const PhonemeSequence& phonemes) const {
  if (!model_) throw ConfigError("difficulty classifier is not trained");
  return model_->Probability(Featurize(phonemes));
}

double DifficultyClassifier::ScoreText(std::string_view text,
                                       const G2pBackend& g2p) const {
  return ScoreSequence(g2p.Phonemize(text));
}

void DifficultyClassifier::Save(const std::filesystem::path& dir) const {
  if (!model_) throw ConfigError("difficulty classifier is not trained");
  std::filesystem::create_directories(dir);
  model_->Save(dir / "model.txt");
  nlohmann::ordered_json meta;
  meta["hash_dim"] = config_.hash_dim;
  meta["max_ngram"] = config_.max_ngram;
  meta["eval"] = {{"precision", eval_summary_.positive.precision},
                  {"recall", eval_summary_.positive.recall},
                  {"f1", eval_summary_.positive.f1},
                  {"macro_f1", eval_summary_.macro_f1},
                  {"test_items", eval_summary_.test_items},
                  {"mean_positive_score", eval_summary_.mean_positive_score},
                  {"mean_negative_score", eval_summary_.mean_negative_score}};
  WriteStringToFile(dir / "meta.json", meta.dump(2) + "\n");
}

DifficultyClassifier DifficultyClassifier::Load(
    const std::filesystem::path& dir, const PhonemeInventory* inventory) {
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(ReadFileToString(dir / "meta.json"));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("difficulty classifier meta is unreadable: " +
                    std::string(e.what()));
  }
  DifficultyConfig config;
  config.hash_dim = meta.at("hash_dim").get<int>();
  config.max_ngram = meta.at("max_ngram").get<int>();
  DifficultyClassifier classifier(inventory, config);
  classifier.model_.emplace(LogisticModel::Load(dir / "model.txt"));
  if (classifier.model_->dim() != classifier.feature_dim()) {
    throw DataError("difficulty classifier dimensions disagree with meta");
  }
  const nlohmann::json& eval = meta.at("eval");
  classifier.eval_summary_.positive.precision = eval.at("precision");
  classifier.eval_summary_.positive.recall = eval.at("recall");
  classifier.eval_summary_.positive.f1 = eval.at("f1");
  classifier.eval_summary_.macro_f1 = eval.at("macro_f1");
  classifier.eval_summary_.test_items = eval.at("test_items");
  classifier.eval_summary_.mean_positive_score =
      eval.at("mean_positive_score");
  classifier.eval_summary_.mean_negative_score =
      eval.at("mean_negative_score");
  return classifier;
}

}  // namespace twistgen
