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

#ifndef TWISTGEN_EVALUATION_DIFFICULTY_H_
#define TWISTGEN_EVALUATION_DIFFICULTY_H_

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "twistgen/evaluation/classifier_data.h"
#include "twistgen/ml/logistic.h"
#include "twistgen/phonemics/g2p.h"
#include "twistgen/phonemics/inventory.h"
#include "twistgen/phonemics/phoneme_sequence.h"

namespace twistgen {

struct DifficultyConfig {
  int hash_dim = 1 << 14;  // hashed symbol n-gram slots
  int max_ngram = 3;       // n-grams of length 1..max_ngram, within words
  LogisticConfig logistic;

  void Validate() const;  // throws ConfigError
};

// Held-out quality of the trained classifier on the parallel test pairs.
struct DifficultyEvalSummary {
  PrSummary positive;      // positive class at the 0.5 threshold
  double macro_f1 = 0.0;   // mean F1 of both classes
  int test_items = 0;
  double mean_positive_score = 0.0;  // mean probability on true twisters
  double mean_negative_score = 0.0;  // mean probability on plain sentences
};

// Phonetic-difficulty classifier over rendered phoneme strings: logistic
// regression on hashed within-word symbol n-grams plus five engineered
// phonetic features. Scores are positive-class ("is a tongue twister")
// probabilities, deterministic for fixed input.
class DifficultyClassifier {
 public:
  static constexpr int kNumPhoneticFeatures = 5;

  explicit DifficultyClassifier(const PhonemeInventory* inventory,
                                DifficultyConfig config = DifficultyConfig());

  // Trains on the dataset's train split and evaluates on its test split,
  // which holds only the parallel twister/counterpart pairs. Throws
  // DataError when either split is unusable.
  void Train(const ClassifierDataset& dataset);

  // Positive-class probability for a rendered phoneme string / a phoneme
  // sequence / a grapheme sentence phonemized on the fly.
  double Score(std::string_view rendered_phonemes) const;
  double ScoreSequence(const PhonemeSequence& phonemes) const;
  double ScoreText(std::string_view text, const G2pBackend& g2p) const;

  // Onset repetition, onset diversity, symbol repetition, sibilant rate,
  // and longest onset run — each normalized into [0,1].
  static std::array<double, kNumPhoneticFeatures> PhoneticFeatures(
      const PhonemeSequence& phonemes);

  SparseFeatures Featurize(const PhonemeSequence& phonemes) const;

  bool trained() const { return model_.has_value(); }
  const DifficultyEvalSummary& eval_summary() const { return eval_summary_; }
  int feature_dim() const { return config_.hash_dim + kNumPhoneticFeatures; }

  void Save(const std::filesystem::path& dir) const;
  static DifficultyClassifier Load(const std::filesystem::path& dir,
                                   const PhonemeInventory* inventory);

 private:
  const PhonemeInventory* inventory_;
  DifficultyConfig config_;
  std::optional<LogisticModel> model_;
  DifficultyEvalSummary eval_summary_;
};

}  // namespace twistgen

#endif  // TWISTGEN_EVALUATION_DIFFICULTY_H_
