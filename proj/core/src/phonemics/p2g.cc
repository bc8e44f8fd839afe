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

#include "twistgen/phonemics/p2g.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/log.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

constexpr const char* kBos = "<s>";
constexpr const char* kEos = "</s>";

std::string Concat(const std::vector<std::string>& symbols) {
  std::string out;
  for (const std::string& s : symbols) out += s;
  return out;
}

// Position-aligned (grapheme word, phoneme word) pairs of one sentence;
// empty when the sentence cannot be word-aligned.
std::vector<GraphoneModel::WordPair> AlignWords(const TransductionPair& pair) {
  std::vector<std::string> words;
  for (const std::string& tok : SplitWhitespace(pair.text)) {
    std::string w = NormalizeWord(tok);
    if (!w.empty()) words.push_back(std::move(w));
  }
  std::vector<const PhonemeSequence::Word*> phone_words;
  for (const PhonemeSequence::Word& w : pair.phonemes.words) {
    if (!w.symbols.empty()) phone_words.push_back(&w);
  }
  if (words.size() != phone_words.size()) return {};
  std::vector<GraphoneModel::WordPair> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    out.push_back({words[i], phone_words[i]->symbols});
  }
  return out;
}

}  // namespace

void P2gTrainConfig::Validate() const {
  if (epochs == 0) throw ConfigError("p2g: epochs must be positive");
  if (val_fraction <= 0.0 || val_fraction >= 1.0) {
    throw ConfigError("p2g: val_fraction must be in (0, 1)");
  }
  if (max_candidates == 0) {
    throw ConfigError("p2g: max_candidates must be positive");
  }
  if (add_k <= 0.0) throw ConfigError("p2g: add_k must be positive");
}

P2gModel P2gModel::Train(const std::vector<TransductionPair>& pairs,
                         const P2gTrainConfig& cfg) {
  cfg.Validate();
  if (pairs.size() < 2) {
    throw DataError("p2g training needs at least two sentence pairs");
  }

  P2gModel model;
  model.cfg_ = cfg;
  model.graphone_ = GraphoneModel(cfg.graphone);

  const std::size_t n_val = std::max<std::size_t>(
      1, static_cast<std::size_t>(
             std::floor(cfg.val_fraction * static_cast<double>(pairs.size()))));
  const std::size_t n_train = pairs.size() - n_val;
  if (n_train == 0) throw DataError("p2g: no training pairs after holdout");

  // Channel and language-model counts come from the training sentences.
  std::vector<GraphoneModel::WordPair> train_words;
  std::unordered_map<std::string, bool> seen_type;
  std::vector<GraphoneModel::WordPair> train_types;
  for (std::size_t i = 0; i < n_train; ++i) {
    std::vector<GraphoneModel::WordPair> aligned = AlignWords(pairs[i]);
    if (aligned.empty()) {
      ++model.report_.misaligned_sentences;
      continue;
    }
    std::string prev = kBos;
    ++model.unigrams_[kBos];
    for (GraphoneModel::WordPair& wp : aligned) {
      const std::string phone_key = Concat(wp.symbols);
      ++model.word_table_[phone_key][wp.letters];
      ++model.unigrams_[wp.letters];
      ++model.bigrams_[prev + " " + wp.letters];
      prev = wp.letters;
      const std::string type_key = wp.letters + "\t" + phone_key;
      if (!seen_type[type_key]) {
        seen_type[type_key] = true;
        train_types.push_back(wp);
      }
      train_words.push_back(std::move(wp));
    }
    ++model.bigrams_[prev + " " + kEos];
    ++model.unigrams_[kEos];
  }
  if (train_types.empty()) {
    throw DataError("p2g: no word-alignable training sentences");
  }
  model.report_.word_pairs = train_words.size();
  model.vocab_size_ = model.unigrams_.size();

  std::vector<GraphoneModel::WordPair> val_types;
  {
    std::unordered_map<std::string, bool> seen_val;
    for (std::size_t i = n_train; i < pairs.size(); ++i) {
      for (GraphoneModel::WordPair& wp : AlignWords(pairs[i])) {
        const std::string type_key = wp.letters + "\t" + Concat(wp.symbols);
        if (!seen_val[type_key]) {
          seen_val[type_key] = true;
          val_types.push_back(std::move(wp));
        }
      }
    }
  }
  if (val_types.empty()) {
    // Degenerate holdout (all sentences misaligned): validate on train types
    // so the curve still exists.
    val_types = train_types;
  }

  model.graphone_.PrepareUniform(train_types);
  model.report_.val_losses.push_back(model.graphone_.MeanNll(val_types));
  GraphoneModel best = model.graphone_;
  double best_loss = model.report_.val_losses[0];
  model.report_.best_epoch = 0;
  for (std::size_t epoch = 1; epoch <= cfg.epochs; ++epoch) {
    model.graphone_.EmEpoch(train_types);
    const double val_loss = model.graphone_.MeanNll(val_types);
    if (!std::isfinite(val_loss)) {
      throw BackendError("p2g: non-finite validation loss at epoch " +
                         std::to_string(epoch));
    }
    model.report_.val_losses.push_back(val_loss);
    if (val_loss < best_loss) {
      best_loss = val_loss;
      best = model.graphone_;
      model.report_.best_epoch = epoch;
    }
    TG_INFO() << "p2g epoch " << epoch << " val loss " << val_loss;
  }
  if (model.report_.best_epoch == 0) {
    // Training never improved on the uniform start; keep the first epoch so
    // the handle is a trained model, but surface the anomaly.
    TG_WARN() << "p2g: validation loss never improved over the uniform start";
    model.report_.best_epoch = 1;
  } else {
    model.graphone_ = std::move(best);
  }
  return model;
}

std::vector<P2gModel::Candidate> P2gModel::WordCandidates(
    const std::string& phone_key) const {
  std::vector<Candidate> out;
  auto it = word_table_.find(phone_key);
  if (it == word_table_.end()) return out;
  uint64_t total = 0;
  for (const auto& [word, count] : it->second) total += count;
  std::vector<std::pair<std::string, uint64_t>> sorted(it->second.begin(),
                                                       it->second.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) {
                     return a.second > b.second;
                   });
  for (const auto& [word, count] : sorted) {
    if (out.size() >= cfg_.max_candidates) break;
    out.push_back({word, std::log(static_cast<double>(count) /
                                  static_cast<double>(total))});
  }
  return out;
}

double P2gModel::BigramLogProb(const std::string& prev,
                               const std::string& word) const {
  const double k = cfg_.add_k;
  auto big = bigrams_.find(prev + " " + word);
  const double num =
      (big == bigrams_.end() ? 0.0 : static_cast<double>(big->second)) + k;
  auto uni = unigrams_.find(prev);
  const double den =
      (uni == unigrams_.end() ? 0.0 : static_cast<double>(uni->second)) +
      k * static_cast<double>(vocab_size_ + 1);
  return std::log(num / den);
}

std::string P2gModel::Transduce(const PhonemeSequence& phonemes,
                                const DecodingConfig& decoding) const {
  if (phonemes.empty()) throw DataError("p2g: empty phoneme sequence");
  decoding.Validate();
  const std::size_t beam_width = std::max<std::size_t>(1, decoding.beam_width);

  struct Hypothesis {
    double score = 0.0;
    std::vector<std::string> words;
    std::string prev = kBos;
  };
  std::vector<Hypothesis> beam{Hypothesis{}};

  for (const PhonemeSequence::Word& word : phonemes.words) {
    if (word.symbols.empty()) {
      // Punctuation-only unit: attach to the previous word downstream.
      for (Hypothesis& h : beam) {
        if (!word.trailing_punct.empty()) {
          if (h.words.empty()) h.words.push_back("");
          h.words.back() += word.trailing_punct;
        }
      }
      continue;
    }
    const std::string phone_key = Concat(word.symbols);
    std::vector<Candidate> candidates = WordCandidates(phone_key);
    if (candidates.empty()) {
      const std::string fallback = graphone_.Decode(word.symbols);
      if (!fallback.empty()) {
        candidates.push_back({fallback, std::log(1e-4)});
      }
    }
    if (candidates.empty()) {
      TG_WARN() << "p2g: no spelling for phoneme word '" << phone_key
                << "', dropping it";
      continue;
    }
    std::vector<Hypothesis> next;
    for (const Hypothesis& h : beam) {
      for (const Candidate& cand : candidates) {
        Hypothesis nh = h;
        nh.score += cand.log_prob +
                    cfg_.lm_weight * BigramLogProb(h.prev, cand.word);
        nh.words.push_back(cand.word + word.trailing_punct);
        nh.prev = cand.word;
        next.push_back(std::move(nh));
      }
    }
    std::stable_sort(next.begin(), next.end(),
                     [](const Hypothesis& a, const Hypothesis& b) {
                       return a.score > b.score;
                     });
    if (next.size() > beam_width) next.resize(beam_width);
    beam = std::move(next);
  }

  for (Hypothesis& h : beam) {
    h.score += cfg_.lm_weight * BigramLogProb(h.prev, kEos);
  }
  const Hypothesis* best = &beam.front();
  for (const Hypothesis& h : beam) {
    if (h.score > best->score) best = &h;
  }
  if (best->words.empty()) throw DataError("p2g produced no words");
  return JoinWith(best->words, " ");
}

void P2gModel::Save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  graphone_.Save(dir / "graphones.tsv");

  std::vector<std::string> table_lines;
  for (const auto& [phone, words] : word_table_) {
    for (const auto& [word, count] : words) {
      table_lines.push_back(phone + "\t" + word + "\t" +
                            std::to_string(count));
    }
  }
  WriteLines(dir / "word_table.tsv", table_lines);

  std::vector<std::string> uni_lines;
  for (const auto& [word, count] : unigrams_) {
    uni_lines.push_back(word + "\t" + std::to_string(count));
  }
  WriteLines(dir / "unigrams.tsv", uni_lines);

  std::vector<std::string> bi_lines;
  for (const auto& [key, count] : bigrams_) {
    bi_lines.push_back(key + "\t" + std::to_string(count));
  }
  WriteLines(dir / "bigrams.tsv", bi_lines);

  nlohmann::json meta;
  meta["type"] = "p2g";
  meta["epochs"] = cfg_.epochs;
  meta["val_fraction"] = cfg_.val_fraction;
  meta["max_candidates"] = cfg_.max_candidates;
  meta["lm_weight"] = cfg_.lm_weight;
  meta["add_k"] = cfg_.add_k;
  meta["best_epoch"] = report_.best_epoch;
  meta["val_losses"] = report_.val_losses;
  meta["word_pairs"] = report_.word_pairs;
  meta["misaligned_sentences"] = report_.misaligned_sentences;
  meta["vocab_size"] = vocab_size_;
  WriteStringToFile(dir / "meta.json", meta.dump(2) + "\n");
}

P2gModel P2gModel::Load(const std::filesystem::path& dir) {
  P2gModel model;
  nlohmann::json meta;
  try {
    meta = nlohmann::json::parse(ReadFileToString(dir / "meta.json"));
  } catch (const nlohmann::json::exception& e) {
    throw DataError("p2g meta.json: " + std::string(e.what()));
  }
  if (meta.value("type", "") != "p2g") {
    throw DataError("not a p2g checkpoint: " + dir.string());
  }
  model.cfg_.epochs = meta.value("epochs", std::size_t{5});
  model.cfg_.val_fraction = meta.value("val_fraction", 0.1);
  model.cfg_.max_candidates = meta.value("max_candidates", std::size_t{5});
  model.cfg_.lm_weight = meta.value("lm_weight", 1.0);
  model.cfg_.add_k = meta.value("add_k", 0.1);
  model.report_.best_epoch = meta.value("best_epoch", std::size_t{0});
  model.report_.val_losses =
      meta.value("val_losses", std::vector<double>());
  model.report_.word_pairs = meta.value("word_pairs", std::size_t{0});
  model.report_.misaligned_sentences =
      meta.value("misaligned_sentences", std::size_t{0});
  model.vocab_size_ = meta.value("vocab_size", uint64_t{0});

  model.graphone_ = GraphoneModel::Load(dir / "graphones.tsv");
  for (const std::string& line : ReadLines(dir / "word_table.tsv")) {
    if (line.empty()) continue;
    std::vector<std::string> f = SplitOn(line, '\t');
    if (f.size() != 3) throw DataError("word_table.tsv: bad line: " + line);
    model.word_table_[f[0]][f[1]] = std::stoull(f[2]);
  }
  for (const std::string& line : ReadLines(dir / "unigrams.tsv")) {
    if (line.empty()) continue;
    std::vector<std::string> f = SplitOn(line, '\t');
    if (f.size() != 2) throw DataError("unigrams.tsv: bad line: " + line);
    model.unigrams_[f[0]] = std::stoull(f[1]);
  }
  for (const std::string& line : ReadLines(dir / "bigrams.tsv")) {
    if (line.empty()) continue;
    std::vector<std::string> f = SplitOn(line, '\t');
    if (f.size() != 2) throw DataError("bigrams.tsv: bad line: " + line);
    model.bigrams_[f[0]] = std::stoull(f[1]);
  }
  return model;
}

}  // namespace twistgen
