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

#include "twistgen/cli/config.h"

#include <initializer_list>
#include <set>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/modeling/run.h"
#include "twistgen/modeling/tasks.h"

namespace twistgen {

namespace {

const std::set<std::string>& KnownMethods() {
  static const std::set<std::string> kMethods = {
      kMethodG2g, kMethodStyleTransfer, kMethodPhonemePipeline,
      kMethodJointTemplate};
  return kMethods;
}

void CheckKeys(const nlohmann::json& j,
               std::initializer_list<const char*> allowed,
               const std::string& where) {
  if (!j.is_object()) {
    throw ConfigError("config section '" + where + "' must be an object");
  }
  std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (ok.count(key) == 0) {
      throw ConfigError("unknown config key '" + where + "." + key + "'");
    }
  }
}

constexpr std::initializer_list<const char*> kLmKeys = {
    "context",      "embed_dim",    "hidden_dim",  "epochs",
    "batch_size",   "lr",           "warmup_steps", "weight_decay",
    "val_fraction", "max_seq_len",  "seed"};

LmConfig ParseLmSection(const nlohmann::json& j, const std::string& where) {
  CheckKeys(j, kLmKeys, where);
  return LmConfigFromJson(j);
}

void ParsePaths(const nlohmann::json& j, RunConfig& config) {
  CheckKeys(j,
            {"corpus", "generic_corpus", "lexicon", "inventory", "stopwords",
             "blocklist", "synonyms", "pos_lexicon", "proper_nouns",
             "data_dir", "cache_dir", "runs_root"},
            "paths");
  auto get = [&j](const char* key, std::string& out) {
    if (j.contains(key)) out = j.at(key).get<std::string>();
  };
  get("corpus", config.corpus_path);
  get("generic_corpus", config.generic_corpus_path);
  get("lexicon", config.lexicon_path);
  get("inventory", config.inventory_path);
  get("stopwords", config.stopwords_path);
  get("blocklist", config.blocklist_path);
  get("synonyms", config.synonyms_path);
  get("pos_lexicon", config.pos_lexicon_path);
  get("proper_nouns", config.proper_nouns_path);
  get("data_dir", config.data_dir);
  get("cache_dir", config.cache_dir);
  get("runs_root", config.runs_root);
}

void ParsePrepare(const nlohmann::json& j, RunConfig& config) {
  CheckKeys(j,
            {"ratios", "near_dup_threshold", "min_tokens", "keywords_k",
             "keyword_bigrams", "prompt_words", "classifier_negatives"},
            "prepare");
  if (j.contains("ratios")) {
    const nlohmann::json& r = j.at("ratios");
    CheckKeys(r, {"train", "val", "test"}, "prepare.ratios");
    if (r.contains("train")) config.ratios.train = r.at("train").get<double>();
    if (r.contains("val")) config.ratios.val = r.at("val").get<double>();
    if (r.contains("test")) config.ratios.test = r.at("test").get<double>();
  }
  if (j.contains("near_dup_threshold")) {
    config.near_dup_threshold = j.at("near_dup_threshold").get<double>();
  }
  if (j.contains("min_tokens")) {
    config.min_tokens = j.at("min_tokens").get<int>();
  }
  if (j.contains("keywords_k")) {
    config.keywords.k = j.at("keywords_k").get<std::size_t>();
  }
  if (j.contains("keyword_bigrams")) {
    config.keywords.use_bigrams = j.at("keyword_bigrams").get<bool>();
  }
  if (j.contains("prompt_words")) {
    config.prompt_words = j.at("prompt_words").get<int>();
  }
  if (j.contains("classifier_negatives")) {
    config.classifier_negatives = j.at("classifier_negatives").get<int>();
  }
}

void ParsePretrain(const nlohmann::json& j, RunConfig& config) {
  CheckKeys(j, {"sentences", "min_count", "grapheme_lm", "phoneme_lm"},
            "pretrain");
  if (j.contains("sentences")) {
    config.pretrain_sentences = j.at("sentences").get<int>();
  }
  if (j.contains("min_count")) {
    config.lm_min_count = j.at("min_count").get<std::size_t>();
  }
  if (j.contains("grapheme_lm")) {
    config.grapheme_lm =
        ParseLmSection(j.at("grapheme_lm"), "pretrain.grapheme_lm");
  }
  if (j.contains("phoneme_lm")) {
    config.phoneme_lm =
        ParseLmSection(j.at("phoneme_lm"), "pretrain.phoneme_lm");
  }
}

void ParseP2g(const nlohmann::json& j, RunConfig& config) {
  CheckKeys(j,
            {"epochs", "val_fraction", "max_candidates", "lm_weight", "add_k",
             "sentences", "max_letters", "max_symbols", "smoothing"},
            "p2g");
  if (j.contains("epochs")) {
    config.p2g.epochs = j.at("epochs").get<std::size_t>();
  }
  if (j.contains("val_fraction")) {
    config.p2g.val_fraction = j.at("val_fraction").get<double>();
  }
  if (j.contains("max_candidates")) {
    config.p2g.max_candidates = j.at("max_candidates").get<std::size_t>();
  }
  if (j.contains("lm_weight")) {
    config.p2g.lm_weight = j.at("lm_weight").get<double>();
  }
  if (j.contains("add_k")) config.p2g.add_k = j.at("add_k").get<double>();
  if (j.contains("max_letters")) {
    config.p2g.graphone.max_letters = j.at("max_letters").get<std::size_t>();
  }
  if (j.contains("max_symbols")) {
    config.p2g.graphone.max_symbols = j.at("max_symbols").get<std::size_t>();
  }
  if (j.contains("smoothing")) {
    config.p2g.graphone.smoothing = j.at("smoothing").get<double>();
  }
  if (j.contains("sentences")) {
    config.p2g_sentences = j.at("sentences").get<int>();
  }
}

void ParseDifficulty(const nlohmann::json& j, RunConfig& config) {
  CheckKeys(j, {"hash_dim", "max_ngram", "logistic"}, "difficulty");
  if (j.contains("hash_dim")) {
    config.difficulty.hash_dim = j.at("hash_dim").get<int>();
  }
  if (j.contains("max_ngram")) {
    config.difficulty.max_ngram = j.at("max_ngram").get<int>();
  }
  if (j.contains("logistic")) {
    const nlohmann::json& l = j.at("logistic");
    CheckKeys(l, {"epochs", "batch_size", "lr", "l2", "seed"},
              "difficulty.logistic");
    LogisticConfig& cfg = config.difficulty.logistic;
    if (l.contains("epochs")) cfg.epochs = l.at("epochs").get<int>();
    if (l.contains("batch_size")) {
      cfg.batch_size = l.at("batch_size").get<int>();
    }
    if (l.contains("lr")) cfg.lr = l.at("lr").get<double>();
    if (l.contains("l2")) cfg.l2 = l.at("l2").get<double>();
    if (l.contains("seed")) cfg.seed = l.at("seed").get<std::uint64_t>();
  }
}

}  // namespace

void ApplyOverride(nlohmann::ordered_json& config, const std::string& spec) {
  const std::size_t eq = spec.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("override must look like key.path=value: " + spec);
  }
  const std::string path = spec.substr(0, eq);
  const std::string value = spec.substr(eq + 1);

  nlohmann::ordered_json* node = &config;
  std::size_t start = 0;
  while (true) {
    const std::size_t dot = path.find('.', start);
    const std::string key = path.substr(
        start, dot == std::string::npos ? std::string::npos : dot - start);
    if (key.empty()) {
      throw ConfigError("override has an empty path segment: " + spec);
    }
    if (dot == std::string::npos) {
      nlohmann::ordered_json parsed =
          nlohmann::ordered_json::parse(value, nullptr,
                                        /*allow_exceptions=*/false);
      if (parsed.is_discarded()) {
        (*node)[key] = value;  // plain string
      } else {
        (*node)[key] = parsed;
      }
      return;
    }
    node = &(*node)[key];
    if (!node->is_object() && !node->is_null()) {
      throw ConfigError("override path crosses a non-object value: " + spec);
    }
    start = dot + 1;
  }
}

RunConfig ParseRunConfig(const nlohmann::ordered_json& j) {
  CheckKeys(j,
            {"task", "method", "seed", "paths", "prepare", "pretrain", "p2g",
             "finetune", "decoding", "difficulty", "relevance"},
            "config");
  RunConfig config;
  config.raw = j;
  if (j.contains("task")) config.task = j.at("task").get<std::string>();
  if (j.contains("method")) config.method = j.at("method").get<std::string>();
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("paths")) ParsePaths(j.at("paths"), config);
  if (j.contains("prepare")) ParsePrepare(j.at("prepare"), config);
  if (j.contains("pretrain")) ParsePretrain(j.at("pretrain"), config);
  if (j.contains("p2g")) ParseP2g(j.at("p2g"), config);
  if (j.contains("finetune")) {
    nlohmann::json finetune = j.at("finetune");
    bool mask = false;
    if (finetune.contains("mask_source_loss")) {
      mask = finetune.at("mask_source_loss").get<bool>();
      finetune.erase("mask_source_loss");
    }
    config.finetune = ParseLmSection(finetune, "finetune");
    config.mask_source_loss = mask;
  }
  if (j.contains("decoding")) {
    const nlohmann::json& d = j.at("decoding");
    CheckKeys(d, {"strategy", "top_p", "temperature", "beam_width",
                  "max_new_tokens"},
              "decoding");
    config.decoding = DecodingConfigFromJson(d);
  }
  if (j.contains("difficulty")) ParseDifficulty(j.at("difficulty"), config);
  if (j.contains("relevance")) {
    const nlohmann::json& r = j.at("relevance");
    CheckKeys(r, {"baseline_pairs"}, "relevance");
    if (r.contains("baseline_pairs")) {
      config.relevance_baseline_pairs = r.at("baseline_pairs").get<int>();
    }
  }

  // Cross-field validation.
  TaskSettingFromName(config.task);
  if (KnownMethods().count(config.method) == 0) {
    std::string valid;
    for (const std::string& m : KnownMethods()) {
      if (!valid.empty()) valid += ", ";
      valid += m;
    }
    throw ConfigError("unknown method '" + config.method +
                      "' (valid: " + valid + ")");
  }
  config.ratios.Validate();
  if (config.near_dup_threshold <= 0.0 || config.near_dup_threshold > 1.0) {
    throw ConfigError("prepare.near_dup_threshold must lie in (0,1]");
  }
  if (config.min_tokens < 1) {
    throw ConfigError("prepare.min_tokens must be >= 1");
  }
  if (config.keywords.k == 0) {
    throw ConfigError("prepare.keywords_k must be >= 1");
  }
  if (config.prompt_words < 1) {
    throw ConfigError("prepare.prompt_words must be >= 1");
  }
  if (config.classifier_negatives < 0) {
    throw ConfigError("prepare.classifier_negatives must be >= 0");
  }
  if (config.pretrain_sentences < 0 || config.p2g_sentences < 0) {
    throw ConfigError("sentence counts must be >= 0");
  }
  if (config.relevance_baseline_pairs <= 0) {
    throw ConfigError("relevance.baseline_pairs must be >= 1");
  }
  config.grapheme_lm.Validate();
  config.phoneme_lm.Validate();
  config.finetune.Validate();
  config.decoding.Validate();
  config.p2g.Validate();
  config.difficulty.Validate();
  return config;
}

RunConfig LoadRunConfig(const std::filesystem::path& path,
                        const std::vector<std::string>& overrides) {
  if (!std::filesystem::exists(path)) {
    throw ConfigError("config file not found: " + path.string());
  }
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(ReadFileToString(path));
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError("config file " + path.string() +
                      " is not valid JSON: " + e.what());
  }
  for (const std::string& spec : overrides) ApplyOverride(j, spec);
  return ParseRunConfig(j);
}

void CheckInputPaths(const RunConfig& config) {
  const std::pair<const char*, const std::string*> paths[] = {
      {"corpus", &config.corpus_path},
      {"generic_corpus", &config.generic_corpus_path},
      {"lexicon", &config.lexicon_path},
      {"inventory", &config.inventory_path},
      {"stopwords", &config.stopwords_path},
      {"blocklist", &config.blocklist_path},
      {"synonyms", &config.synonyms_path},
      {"pos_lexicon", &config.pos_lexicon_path},
      {"proper_nouns", &config.proper_nouns_path},
  };
  for (const auto& [name, path] : paths) {
    if (!std::filesystem::exists(*path)) {
      throw ConfigError(std::string("missing input path (") + name +
                        "): " + *path);
    }
  }
}

}  // namespace twistgen
