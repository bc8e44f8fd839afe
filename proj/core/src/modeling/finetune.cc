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

#include "twistgen/modeling/finetune.h"

#include <algorithm>

#include "twistgen/common/error.h"
#include "twistgen/common/log.h"
#include "twistgen/modeling/template.h"

namespace twistgen {
namespace {

std::vector<std::vector<std::string>> TokenizeAll(
    const MixedTokenizer& tokenizer, const std::vector<std::string>& texts) {
  std::vector<std::vector<std::string>> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) out.push_back(tokenizer.Tokenize(text));
  return out;
}

}  // namespace

LmTrainReport FinetuneCausal(NeuralLm& lm, const MixedTokenizer& tokenizer,
                             const std::vector<std::string>& sequences,
                             const LmConfig& config, bool mask_source_loss) {
  if (sequences.empty()) throw DataError("no fine-tuning sequences");
  const std::vector<std::vector<std::string>> tokenized =
      TokenizeAll(tokenizer, sequences);

  std::vector<std::string> new_tokens;
  for (const std::vector<std::string>& tokens : tokenized) {
    for (const std::string& token : tokens) new_tokens.push_back(token);
  }
  lm.ExtendVocab(new_tokens);

  std::vector<std::vector<int>> ids;
  ids.reserve(tokenized.size());
  std::vector<std::size_t> loss_begins;
  for (const std::vector<std::string>& tokens : tokenized) {
    ids.push_back(lm.vocab().Encode(tokens));
    if (mask_source_loss) {
      const auto sep =
          std::find(tokens.begin(), tokens.end(), MixedTokenizer::kSep);
      loss_begins.push_back(
          sep == tokens.end()
              ? 0
              : static_cast<std::size_t>(sep - tokens.begin()) + 1);
    }
  }
  return lm.Train(ids, config, loss_begins);
}

PretrainedLm PretrainGraphemeLm(const std::vector<std::string>& sentences,
                                const MixedTokenizer& tokenizer,
                                const LmConfig& config,
                                std::size_t min_count) {
  if (sentences.empty()) throw DataError("no pretraining sentences");
  const std::vector<std::vector<std::string>> tokenized =
      TokenizeAll(tokenizer, sentences);
  Vocab vocab = Vocab::Build(tokenized, min_count);
  std::vector<std::vector<int>> ids;
  ids.reserve(tokenized.size());
  for (const std::vector<std::string>& tokens : tokenized) {
    ids.push_back(vocab.Encode(tokens));
  }
  NeuralLm lm(std::move(vocab), config);
  LmTrainReport report = lm.Train(ids);
  return PretrainedLm{std::move(lm), std::move(report)};
}

PretrainedLm PretrainPhonemeLm(const std::vector<std::string>& sentences,
                               const G2pBackend& g2p,
                               const KeywordExtractor* keywords,
                               const MixedTokenizer& tokenizer,
                               const LmConfig& config, TaskSetting task) {
  if (sentences.empty()) throw DataError("no pretraining sentences");
  if (task == TaskSetting::kKeyword && keywords == nullptr) {
    throw ConfigError("keyword task pretraining needs a keyword extractor");
  }
  std::vector<std::string> texts;
  std::size_t skipped = 0;
  for (const std::string& sentence : sentences) {
    try {
      const std::string phonemes = g2p.Phonemize(sentence).Render();
      if (task == TaskSetting::kPrompt) {
        texts.push_back(phonemes);
      } else {
        const std::vector<std::string> kws = keywords->ExtractTexts(sentence);
        if (kws.empty()) {
          ++skipped;
          continue;
        }
        const std::string source =
            g2p.Phonemize(JoinKeywords(kws)).Render();
        texts.push_back(
            RenderTemplate(TemplateMode::kG2G, source, phonemes).rendered);
      }
    } catch (const Error&) {
      ++skipped;
    }
  }
  if (skipped > 0) {
    TG_WARN() << "phoneme pretraining skipped " << skipped << " of "
              << sentences.size() << " sentences";
  }
  if (texts.empty()) throw DataError("no phonemizable pretraining sentences");

  const std::vector<std::vector<std::string>> tokenized =
      TokenizeAll(tokenizer, texts);
  Vocab vocab = Vocab::Build(tokenized, /*min_count=*/1);
  // Generation must be able to emit any inventory symbol, seen or not.
  vocab.Add(MixedTokenizer::kWordMark);
  for (const std::string& symbol : g2p.inventory().symbols()) {
    vocab.Add(symbol);
  }
  for (const std::string& symbol : g2p.inventory().symbols()) {
    if (!vocab.Contains(symbol)) {
      throw BackendError("phoneme LM vocabulary misses symbol: " + symbol);
    }
  }
  std::vector<std::vector<int>> ids;
  ids.reserve(tokenized.size());
  for (const std::vector<std::string>& tokens : tokenized) {
    ids.push_back(vocab.Encode(tokens));
  }
  NeuralLm lm(std::move(vocab), config);
  LmTrainReport report = lm.Train(ids);
  return PretrainedLm{std::move(lm), std::move(report)};
}

}  // namespace twistgen
