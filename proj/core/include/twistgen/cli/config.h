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

#ifndef TWISTGEN_CLI_CONFIG_H_
#define TWISTGEN_CLI_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistgen/corpus/keywords.h"
#include "twistgen/corpus/types.h"
#include "twistgen/evaluation/difficulty.h"
#include "twistgen/ml/neural_lm.h"
#include "twistgen/modeling/decoding.h"
#include "twistgen/phonemics/p2g.h"

namespace twistgen {

// Declarative run configuration: one JSON file plus dotted command-line
// overrides drives every command.
struct RunConfig {
  std::string task = "tt-prompt";
  std::string method = "g2g";
  std::uint64_t seed = 13;

  // Input resources.
  std::string corpus_path = "data/tt_corp.jsonl";
  std::string generic_corpus_path = "data/generic_corpus.txt";
  std::string lexicon_path = "data/ipa_lexicon.tsv";
  std::string inventory_path = "data/ipa_inventory.txt";
  std::string stopwords_path = "data/stopwords.txt";
  std::string blocklist_path = "data/blocklist.txt";
  std::string synonyms_path = "data/synonyms.tsv";
  std::string pos_lexicon_path = "data/pos_lexicon.tsv";
  std::string proper_nouns_path = "data/proper_nouns.txt";

  // Output roots.
  std::string data_dir = "out/prepared";
  std::string cache_dir = "out/cache";
  std::string runs_root = "out/runs";

  // Data preparation.
  SplitRatios ratios;
  double near_dup_threshold = 0.8;
  int min_tokens = 4;
  KeywordOptions keywords;
  int prompt_words = 3;
  int classifier_negatives = 500;

  // Backbone pretraining.
  int pretrain_sentences = 0;  // 0 = whole generic corpus
  std::size_t lm_min_count = 2;
  LmConfig grapheme_lm;
  LmConfig phoneme_lm;

  // Phoneme-to-grapheme transducer.
  P2gTrainConfig p2g;
  int p2g_sentences = 0;  // 0 = whole generic corpus

  // Method fine-tuning; model dimensions always follow the backbone.
  LmConfig finetune;
  bool mask_source_loss = false;

  // Test-time decoding.
  DecodingConfig decoding;

  // Evaluation.
  DifficultyConfig difficulty;
  int relevance_baseline_pairs = 200;

  // The merged JSON this config was parsed from, for artifact snapshots.
  nlohmann::ordered_json raw;
};

// Applies `key.path=value` onto the JSON tree; values parse as JSON when
// possible and fall back to strings. Throws ConfigError on a malformed spec.
void ApplyOverride(nlohmann::ordered_json& config, const std::string& spec);

// Parses the merged JSON into a RunConfig; unknown keys raise ConfigError so
// typos do not silently fall back to defaults.
RunConfig ParseRunConfig(const nlohmann::ordered_json& j);

// Reads a config file, applies overrides in order, parses, validates.
RunConfig LoadRunConfig(const std::filesystem::path& path,
                        const std::vector<std::string>& overrides = {});

// Checks that every referenced input path exists. Throws ConfigError naming
// the first missing path.
void CheckInputPaths(const RunConfig& config);

}  // namespace twistgen

#endif  // TWISTGEN_CLI_CONFIG_H_
