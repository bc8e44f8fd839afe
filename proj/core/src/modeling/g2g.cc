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

#include "twistgen/modeling/g2g.h"

#include "twistgen/common/error.h"
#include "twistgen/common/log.h"
#include "twistgen/common/rng.h"
#include "twistgen/modeling/finetune.h"
#include "twistgen/modeling/generate.h"
#include "twistgen/modeling/template.h"

namespace twistgen {

LmTrainReport FinetuneG2g(NeuralLm& lm, const Corpus& corpus, TaskSetting task,
                          const MixedTokenizer& tokenizer,
                          const LmConfig& config, bool mask_source_loss) {
  const std::vector<TaskPair> train_pairs =
      BuildTaskPairs(corpus, task, Split::kTrain);
  if (train_pairs.empty()) throw DataError("empty train split");
  std::vector<std::string> sequences;
  sequences.reserve(train_pairs.size());
  for (const TaskPair& pair : train_pairs) {
    sequences.push_back(
        RenderTemplate(TemplateMode::kG2G, pair.source, pair.target).rendered);
  }
  return FinetuneCausal(lm, tokenizer, sequences, config, mask_source_loss);
}

std::vector<GenerationRecord> GenerateTemplateCompletions(
    const NeuralLm& lm, const MixedTokenizer& tokenizer, const Corpus& corpus,
    TaskSetting task, const DecodingConfig& decoding, std::uint64_t seed,
    const std::string& method) {
  const std::vector<TaskPair> test_pairs =
      BuildTaskPairs(corpus, task, Split::kTest);
  const StopCriterion stop{{std::string(1, TemplateClose(TemplateMode::kG2G))},
                           false};
  std::vector<GenerationRecord> records;
  records.reserve(test_pairs.size());
  for (const TaskPair& pair : test_pairs) {
    GenerationRecord record;
    record.id = pair.id;
    record.input = pair.source;
    try {
      const std::string prefix =
          RenderGenerationPrefix(TemplateMode::kG2G, pair.source);
      std::mt19937_64 rng = MakeEngine(
          seed, method + ":" + TaskSettingName(task) + ":" + pair.id);
      record.final_text =
          GenerateCausal(lm, tokenizer, prefix, decoding, stop, rng)
              .completion;
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

G2gResult RunG2g(const Corpus& corpus, TaskSetting task,
                 const NeuralLm& base_lm, const MixedTokenizer& tokenizer,
                 const LmConfig& finetune_config,
                 const DecodingConfig& decoding, std::uint64_t seed,
                 const std::filesystem::path& runs_root,
                 bool mask_source_loss) {
  NeuralLm lm = base_lm;
  LmTrainReport report =
      FinetuneG2g(lm, corpus, task, tokenizer, finetune_config,
                  mask_source_loss);

  nlohmann::ordered_json config;
  config["finetune"] = LmConfigToJson(finetune_config);
  config["decoding"] = DecodingConfigToJson(decoding);
  config["mask_source_loss"] = mask_source_loss;
  MethodRun run = CreateMethodRun(runs_root, kMethodG2g, task, seed, config);
  std::filesystem::create_directories(run.dir / "checkpoints");
  lm.Save(run.dir / "checkpoints" / "model");
  WriteLossCurve(report, run.dir / "loss_curve.json");

  std::vector<GenerationRecord> records = GenerateTemplateCompletions(
      lm, tokenizer, corpus, task, decoding, seed, kMethodG2g);
  WriteGenerations(records, run.dir / "generations.jsonl");
  ReleaseRunLock(run.dir);

  return G2gResult{std::move(run), std::move(records), std::move(report)};
}

}  // namespace twistgen
