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

#ifndef TWISTGEN_PHONEMICS_GRAPHONE_H_
#define TWISTGEN_PHONEMICS_GRAPHONE_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace twistgen {

// Joint letter/phoneme chunk model ("graphones"): a word is a sequence of
// chunks pairing 0-2 letters with 0-2 phoneme symbols. Chunk probabilities
// are learned by expectation-maximization over word pairs; decoding finds
// the most probable letter sequence for a phoneme sequence. Serves as the
// open-vocabulary fallback of the phoneme→grapheme transducer.
struct GraphoneConfig {
  std::size_t max_letters = 2;   // letters per chunk
  std::size_t max_symbols = 2;   // phoneme symbols per chunk
  double smoothing = 1e-6;       // floor mass for unseen chunks
};

class GraphoneModel {
 public:
  using Config = GraphoneConfig;

  struct WordPair {
    std::string letters;               // lowercase grapheme form
    std::vector<std::string> symbols;  // inventory units
  };

  explicit GraphoneModel(Config config = Config());

  // Counts the admissible chunk types of the pairs; defines the uniform
  // distribution the first EM sweep (and any pre-training evaluation)
  // starts from. Call once before training.
  void PrepareUniform(const std::vector<WordPair>& pairs);

  // One EM sweep over the pairs. Starts from the uniform chunk distribution
  // until the first sweep completes. Returns the mean per-pair negative
  // log-likelihood under the parameters in effect during the sweep.
  double EmEpoch(const std::vector<WordPair>& pairs);

  // Mean joint NLL per pair, normalized by symbol count + 1.
  double MeanNll(const std::vector<WordPair>& pairs) const;

  // Joint log-probability of one pair (forward algorithm over alignments).
  double PairLogProb(const WordPair& pair) const;

  // Most probable letter sequence for the symbols. Symbols with no learned
  // chunk fall back to a floor-probability empty expansion, so decoding
  // always completes and never emits phoneme symbols.
  std::string Decode(const std::vector<std::string>& symbols) const;

  bool trained() const { return !theta_.empty(); }
  std::size_t num_chunk_types() const { return theta_.size(); }
  const Config& config() const { return config_; }

  void Save(const std::filesystem::path& path) const;
  static GraphoneModel Load(const std::filesystem::path& path,
                            Config config = Config());

 private:
  double ChunkProb(const std::string& key) const;
  double Floor() const;
  void RebuildReverseIndex();

  Config config_;
  // key = letters + '\t' + symbols joined by ' '; value = probability.
  std::unordered_map<std::string, double> theta_;
  // phoneme chunk -> (letter chunk, probability), for decoding.
  std::unordered_map<std::string, std::vector<std::pair<std::string, double>>>
      reverse_;
  std::size_t uniform_types_ = 0;  // admissible types before training
};

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_GRAPHONE_H_
