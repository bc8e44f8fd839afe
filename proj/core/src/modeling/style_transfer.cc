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

#include "twistgen/modeling/style_transfer.h"

#include <algorithm>

#include "twistgen/common/error.h"
#include "twistgen/common/log.h"
#include "twistgen/common/rng.h"
#include "twistgen/modeling/finetune.h"
#include "twistgen/modeling/generate.h"
#include "twistgen/modeling/template.h"

namespace twistgen {
namespace {

constexpr std::size_t kStage1MaxNewTokens = 40;

// Stage 1 under the prompt task: continue the raw prompt into a plain
// sentence; sentence-final punctuation ends it and is kept.
std::string Stage1Continue(const NeuralLm& lm, const MixedTokenizer& tokenizer,
                           const std::string& prompt,
                           const DecodingConfig& decoding,
                           std::mt19937_64& rng) {
  DecodingConfig stage1 = decoding;
  stage1.strategy = DecodingStrategy::kNucleus;
  stage1.max_new_tokens = kStage1MaxNewTokens;
  const StopCriterion stop{{".", "!", "?"}, /*include_stop=*/true};
  return GenerateCausal(lm, tokenizer, prompt, stage1, stop, rng).full_text;
}

// Stage 1 under the keyword task: keyword-to-text model completion.
std::string Stage1FromKeywords(const NeuralLm& lm,
                               const MixedTokenizer& tokenizer,
                               const std::string& keywords,
                               const DecodingConfig& decoding,
                               std::mt19937_64& rng) {
  DecodingConfig stage1 = decoding;
  stage1.strategy = DecodingStrategy::kNucleus;
  stage1.max_new_tokens = kStage1MaxNewTokens;
  const StopCriterion stop{{std::string(1, TemplateClose(TemplateMode::kG2G))},
                           false};
  const std::string prefix =
      RenderGenerationPrefix(TemplateMode::kG2G, keywords);
  return GenerateCausal(lm, tokenizer, prefix, stage1, stop, rng).completion;
}

}  // namespace

LmTrainReport TrainKeywordToText(NeuralLm& lm,
                                 const std::vector<std::string>& sentences,
                                 const KeywordExtractor& keywords,
                                 const MixedTokenizer& tokenizer,
                                 const LmConfig& config) {
  if (sentences.empty()) throw DataError("no sentences for keyword-to-text");
  std::vector<std::string> sequences;
  std::size_t skipped = 0;
  for (const std::string& sentence : sentences) {
    try {
      const std::vector<std::string> kws = keywords.ExtractTexts(sentence);
      if (kws.empty()) {
        ++skipped;
        continue;
      }
      sequences.push_back(
          RenderTemplate(TemplateMode::kG2G, JoinKeywords(kws), sentence)
              .rendered);
    } catch (const Error&) {
      ++skipped;
    }
  }
  if (skipped > 0) {
    TG_WARN() << "keyword-to-text skipped " << skipped << " of "
              << sentences.size() << " sentences";
  }
  if (sequences.empty()) {
    throw DataError("no usable sentences for keyword-to-text");
  }
  return FinetuneCausal(lm, tokenizer, sequences, config);
}

LmTrainReport TrainTwisterizer(
    NeuralLm& lm,
    const std::vector<std::pair<std::string, std::string>>& parallel,
    const MixedTokenizer& tokenizer, const LmConfig& config) {
  if (parallel.empty()) throw DataError("no parallel pairs for twisterizer");
  std::vector<std::string> sequences;
  sequences.reserve(parallel.size());
  for (const auto& [plain, twister] : parallel) {
    sequences.push_back(
        RenderTemplate(TemplateMode::kG2G, plain, twister).rendered);
  }
  return FinetuneCausal(lm, tokenizer, sequences, config);
}

std::vector<std::pair<std::string, std::string>> TwisterizerPairs(
    const Corpus& corpus, Split split) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const TwisterExample& example : corpus.examples) {
    if (example.split != split) continue;
    if (!example.non_tt_text || example.non_tt_text->empty()) continue;
    pairs.emplace_back(*example.non_tt_text, example.text);
  }
  return pairs;
}

std::vector<GenerationRecord> StyleTransferGenerate(
    const NeuralLm& stage1_lm, const NeuralLm& twisterizer,
    const MixedTokenizer& tokenizer, const Corpus& corpus, TaskSetting task,
    const DecodingConfig& decoding, std::uint64_t seed) {
  DecodingConfig stage2 = decoding;
  stage2.strategy = DecodingStrategy::kBeam;
  const StopCriterion template_stop{
      {std::string(1, TemplateClose(TemplateMode::kG2G))}, false};

  const std::vector<TaskPair> test_pairs =
      BuildTaskPairs(corpus, task, Split::kTest);
  std::vector<GenerationRecord> records;
  records.reserve(test_pairs.size());
  for (const TaskPair& pair : test_pairs) {
    GenerationRecord record;
    record.id = pair.id;
    record.input = pair.source;
    try {
      std::mt19937_64 rng = MakeEngine(
          seed, std::string(kMethodStyleTransfer) + ":" +
                    TaskSettingName(task) + ":" + pair.id);
      const std::string stage1_text =
          task == TaskSetting::kPrompt
              ? Stage1Continue(stage1_lm, tokenizer, pair.source, decoding,
                               rng)
              : Stage1FromKeywords(stage1_lm, tokenizer, pair.source,
                                   decoding, rng);
      record.intermediates.emplace_back("stage1", stage1_text);

      const std::string safe = StripReservedTemplateChars(stage1_text);
      try {
        const std::string prefix =
            RenderGenerationPrefix(TemplateMode::kG2G, safe);
        record.final_text =
            GenerateCausal(twisterizer, tokenizer, prefix, stage2,
                           template_stop, rng)
                .completion;
        record.intermediates.emplace_back("stage2_fallback", "false");
      } catch (const EmptyGenerationError&) {
        record.final_text = stage1_text;
        record.intermediates.emplace_back("stage2_fallback", "true");
        TG_WARN() << "stage 2 empty for " << pair.id
                  << "; falling back to stage 1";
      }
    } catch (const Error& e) {
      record.failed = true;
      record.error = e.what();
      TG_WARN() << "generation failed for " << pair.id << ": " << e.what();
    }
    records.push_back(std::move(record));
  }
  SortRecordsById(records);
  return records;
}

StyleTransferResult RunStyleTransfer(
    const Corpus& corpus, TaskSetting task, const NeuralLm& stage1_lm,
    const NeuralLm& twisterizer, const MixedTokenizer& tokenizer,
    const DecodingConfig& decoding, std::uint64_t seed,
    const std::filesystem::path& runs_root) {
  nlohmann::ordered_json config;
  config["decoding"] = DecodingConfigToJson(decoding);
  config["stage1_max_new_tokens"] = kStage1MaxNewTokens;
  MethodRun run =
      CreateMethodRun(runs_root, kMethodStyleTransfer, task, seed, config);
  std::filesystem::create_directories(run.dir / "checkpoints");
  stage1_lm.Save(run.dir / "checkpoints" / "stage1");
  twisterizer.Save(run.dir / "checkpoints" / "twisterizer");

  std::vector<GenerationRecord> records = StyleTransferGenerate(
      stage1_lm, twisterizer, tokenizer, corpus, task, decoding, seed);
  WriteGenerations(records, run.dir / "generations.jsonl");
  ReleaseRunLock(run.dir);

  return StyleTransferResult{std::move(run), std::move(records)};
}

}  // namespace twistgen
