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

#ifndef TWISTGEN_PHONEMICS_P2G_H_
#define TWISTGEN_PHONEMICS_P2G_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "twistgen/modeling/decoding.h"
#include "twistgen/phonemics/graphone.h"
#include "twistgen/phonemics/p2g_dataset.h"
#include "twistgen/phonemics/phoneme_sequence.h"

namespace twistgen {

struct P2gTrainConfig {
  std::size_t epochs = 5;
  double val_fraction = 0.1;       // tail of the pair list, deterministic
  std::size_t max_candidates = 5;  // channel candidates per phoneme word
  double lm_weight = 1.0;          // bigram score weight during decoding
  double add_k = 0.1;              // bigram add-k smoothing
  GraphoneModel::Config graphone;

  void Validate() const;
};

struct P2gTrainReport {
  // val_losses[0] is the pre-training (uniform) loss; entry e is the loss
  // after epoch e. Best epoch is 1-based into the trained entries.
  std::vector<double> val_losses;
  std::size_t best_epoch = 0;
  std::size_t word_pairs = 0;
  std::size_t misaligned_sentences = 0;  // word counts differed; skipped
};

// Phoneme→grapheme transducer: a word-level channel (phoneme word →
// grapheme candidates with counts, learned from the training pairs) scored
// together with a word-bigram language model under beam search; words the
// channel has never seen fall back to the graphone model. Output is
// lowercase; case restoration happens downstream.
class P2gModel {
 public:
  // Trains on sentence pairs, holding out the tail fraction for the
  // validation curve; keeps the graphone parameters of the epoch with the
  // best validation loss. Throws DataError for empty input and BackendError
  // for a non-finite validation loss.
  static P2gModel Train(const std::vector<TransductionPair>& pairs,
                        const P2gTrainConfig& cfg);

  // Beam width comes from decoding.beam_width (the transducer is a
  // beam-search decoder regardless of the configured strategy).
  std::string Transduce(const PhonemeSequence& phonemes,
                        const DecodingConfig& decoding) const;

  const P2gTrainReport& report() const { return report_; }
  const GraphoneModel& graphone() const { return graphone_; }

  void Save(const std::filesystem::path& dir) const;
  static P2gModel Load(const std::filesystem::path& dir);

 private:
  P2gModel() : graphone_(GraphoneModel::Config()) {}

  struct Candidate {
    std::string word;
    double log_prob;  // channel score
  };
  std::vector<Candidate> WordCandidates(const std::string& phone_key) const;
  double BigramLogProb(const std::string& prev, const std::string& word) const;

  P2gTrainConfig cfg_;
  P2gTrainReport report_;
  GraphoneModel graphone_;
  // concatenated phoneme word -> grapheme word -> count (ordered maps keep
  // serialization and tie-breaking deterministic).
  std::map<std::string, std::map<std::string, uint64_t>> word_table_;
  std::map<std::string, uint64_t> unigrams_;  // includes sentence sentinels
  std::map<std::string, uint64_t> bigrams_;   // key = prev + ' ' + word
  uint64_t vocab_size_ = 0;
};

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_P2G_H_
