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

#include "twistgen/modeling/phoneme_pipeline.h"

#include "twistgen/common/error.h"
#include "twistgen/common/log.h"
#include "twistgen/common/rng.h"
#include "twistgen/modeling/finetune.h"
#include "twistgen/modeling/generate.h"
#include "twistgen/modeling/template.h"

namespace twistgen {
namespace {

// Phoneme rendering of the train-split example, preferring the field
// prepared by the corpus stage.
std::string ExamplePhonemes(const TwisterExample& example,
                            const G2pBackend& g2p) {
  if (example.phonemes && !example.phonemes->empty()) {
    return *example.phonemes;
  }
  return g2p.Phonemize(example.text).Render();
}

}  // namespace

LmTrainReport FinetunePhonemePipeline(NeuralLm& lm, const Corpus& corpus,
                                      TaskSetting task, const G2pBackend& g2p,
                                      const MixedTokenizer& tokenizer,
                                      const LmConfig& config) {
  // Fine-tuning sequences: phoneme renderings of the train twisters; under
  // the keyword task shaped as (phonemized keywords -> phonemized twister)
  // templates so generation can start from keywords.
  std::vector<std::string> sequences;
  for (const TwisterExample& example : corpus.examples) {
    if (example.split != Split::kTrain) continue;
    const std::string phonemes = ExamplePhonemes(example, g2p);
    if (task == TaskSetting::kPrompt) {
      sequences.push_back(phonemes);
    } else {
      if (example.keywords.empty()) {
        throw DataError("example lacks keywords: " + example.id);
      }
      const std::string source =
          g2p.Phonemize(JoinKeywords(example.keywords)).Render();
      sequences.push_back(
          RenderTemplate(TemplateMode::kG2G, source, phonemes).rendered);
    }
  }
  if (sequences.empty()) throw DataError("empty train split");
  return FinetuneCausal(lm, tokenizer, sequences, config);
}

std::vector<GenerationRecord> PhonemePipelineGenerate(
    const NeuralLm& lm, const G2pBackend& g2p, const P2gModel& p2g,
    const RestorationBackend& restorer, const MixedTokenizer& tokenizer,
    const Corpus& corpus, TaskSetting task, const DecodingConfig& decoding,
    std::uint64_t seed) {
  const std::vector<TaskPair> test_pairs =
      BuildTaskPairs(corpus, task, Split::kTest);
  const StopCriterion template_stop{
      {std::string(1, TemplateClose(TemplateMode::kG2G))}, false};
  std::vector<GenerationRecord> records;
  records.reserve(test_pairs.size());
  for (const TaskPair& pair : test_pairs) {
    GenerationRecord record;
    record.id = pair.id;
    record.input = pair.source;
    try {
      std::mt19937_64 rng = MakeEngine(
          seed, std::string(kMethodPhonemePipeline) + ":" +
                    TaskSettingName(task) + ":" + pair.id);
      const std::string input_phonemes =
          g2p.Phonemize(pair.source).Render();
      record.intermediates.emplace_back("input_phonemes", input_phonemes);

      std::string generated_phonemes;
      if (task == TaskSetting::kPrompt) {
        const GenerationOutput out = GenerateCausal(
            lm, tokenizer, input_phonemes, decoding, StopCriterion{}, rng);
        // Both variants are persisted; the prompt-included one continues
        // down the pipeline.
        record.intermediates.emplace_back("phoneme_generation",
                                          out.full_text);
        record.intermediates.emplace_back("phoneme_completion",
                                          out.completion);
        generated_phonemes = out.full_text;
      } else {
        const std::string prefix =
            RenderGenerationPrefix(TemplateMode::kG2G, input_phonemes);
        generated_phonemes =
            GenerateCausal(lm, tokenizer, prefix, decoding, template_stop,
                           rng)
                .completion;
        record.intermediates.emplace_back("phoneme_generation",
                                          generated_phonemes);
      }

      const PhonemeSequence sequence =
          PhonemeSequence::Parse(generated_phonemes, g2p.inventory());
      const std::string grapheme_text = p2g.Transduce(sequence, decoding);
      record.intermediates.emplace_back("grapheme_text", grapheme_text);

      record.final_text = restorer.Restore(grapheme_text);
      record.intermediates.emplace_back("restored_text", record.final_text);
    } catch (const Error& e) {
      record.failed = true;
      record.error = e.what();
      TG_WARN() << "pipeline failed for " << pair.id << ": " << e.what();
    }
    records.push_back(std::move(record));
  }
  SortRecordsById(records);
  return records;
}

PhonemePipelineResult RunPhonemePipeline(
    const Corpus& corpus, TaskSetting task, const NeuralLm& phoneme_base_lm,
    const G2pBackend& g2p, const P2gModel& p2g,
    const RestorationBackend& restorer, const MixedTokenizer& tokenizer,
    const LmConfig& finetune_config, const DecodingConfig& decoding,
    std::uint64_t seed, const std::filesystem::path& runs_root) {
  NeuralLm lm = phoneme_base_lm;
  LmTrainReport report =
      FinetunePhonemePipeline(lm, corpus, task, g2p, tokenizer,
                              finetune_config);

  nlohmann::ordered_json config;
  config["finetune"] = LmConfigToJson(finetune_config);
  config["decoding"] = DecodingConfigToJson(decoding);
  MethodRun run =
      CreateMethodRun(runs_root, kMethodPhonemePipeline, task, seed, config);
  std::filesystem::create_directories(run.dir / "checkpoints");
  lm.Save(run.dir / "checkpoints" / "model");
  WriteLossCurve(report, run.dir / "loss_curve.json");

  std::vector<GenerationRecord> records =
      PhonemePipelineGenerate(lm, g2p, p2g, restorer, tokenizer, corpus, task,
                              decoding, seed);
  WriteGenerations(records, run.dir / "generations.jsonl");
  ReleaseRunLock(run.dir);

  return PhonemePipelineResult{std::move(run), std::move(records),
                               std::move(report)};
}

}  // namespace twistgen
