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

#include "twistgen/modeling/joint.h"

#include <algorithm>

#include "twistgen/common/error.h"
#include "twistgen/common/log.h"
#include "twistgen/common/rng.h"
#include "twistgen/ml/sampling.h"
#include "twistgen/modeling/finetune.h"
#include "twistgen/modeling/g2g.h"

namespace twistgen {

std::vector<TemplateInstance> BuildJointTrainingSet(
    const std::vector<JointExample>& examples) {
  std::vector<TemplateInstance> instances;
  instances.reserve(examples.size() * 4);
  for (const JointExample& example : examples) {
    if (example.source.empty() || example.text.empty()) {
      throw DataError("joint example lacks source or text: " + example.id);
    }
    if (example.phonemized_source.empty() || example.phonemes.empty()) {
      throw DataError("joint example lacks phonemes: " + example.id);
    }
    instances.push_back(
        RenderTemplate(TemplateMode::kG2G, example.source, example.text));
    instances.push_back(RenderTemplate(
        TemplateMode::kP2P, example.phonemized_source, example.phonemes));
    instances.push_back(
        RenderTemplate(TemplateMode::kG2P, example.text, example.phonemes));
    instances.push_back(
        RenderTemplate(TemplateMode::kP2G, example.phonemes, example.text));
  }
  return instances;
}

JointFinetune FinetuneJointTemplate(NeuralLm& lm, const Corpus& corpus,
                                    TaskSetting task, const G2pBackend& g2p,
                                    const MixedTokenizer& tokenizer,
                                    const LmConfig& config,
                                    std::uint64_t seed) {
  const std::vector<TaskPair> train_pairs =
      BuildTaskPairs(corpus, task, Split::kTrain);
  if (train_pairs.empty()) throw DataError("empty train split");
  std::vector<JointExample> examples;
  examples.reserve(train_pairs.size());
  for (const TaskPair& pair : train_pairs) {
    JointExample example;
    example.id = pair.id;
    example.source = pair.source;
    example.phonemized_source = g2p.Phonemize(pair.source).Render();
    example.text = pair.target;
    example.phonemes = g2p.Phonemize(pair.target).Render();
    examples.push_back(std::move(example));
  }

  std::vector<TemplateInstance> instances = BuildJointTrainingSet(examples);
  // All 4N renderings are shuffled uniformly into one training stream.
  std::mt19937_64 shuffle_rng = MakeEngine(seed, "joint-shuffle");
  for (std::size_t i = instances.size() - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(
        UniformUnit(shuffle_rng) * static_cast<double>(i + 1));
    std::swap(instances[i], instances[std::min(j, i)]);
  }
  std::vector<std::string> sequences;
  sequences.reserve(instances.size());
  for (const TemplateInstance& instance : instances) {
    sequences.push_back(instance.rendered);
  }

  JointFinetune result;
  result.sequences = sequences.size();
  result.report = FinetuneCausal(lm, tokenizer, sequences, config);
  return result;
}

JointResult RunJointTemplate(const Corpus& corpus, TaskSetting task,
                             const NeuralLm& base_lm, CountingG2p& g2p,
                             const MixedTokenizer& tokenizer,
                             const LmConfig& finetune_config,
                             const DecodingConfig& decoding,
                             std::uint64_t seed,
                             const std::filesystem::path& runs_root) {
  NeuralLm lm = base_lm;
  JointFinetune finetune = FinetuneJointTemplate(
      lm, corpus, task, g2p, tokenizer, finetune_config, seed);

  nlohmann::ordered_json config;
  config["finetune"] = LmConfigToJson(finetune_config);
  config["decoding"] = DecodingConfigToJson(decoding);
  config["joint_sequences"] = finetune.sequences;
  MethodRun run =
      CreateMethodRun(runs_root, kMethodJointTemplate, task, seed, config);
  std::filesystem::create_directories(run.dir / "checkpoints");
  lm.Save(run.dir / "checkpoints" / "model");
  WriteLossCurve(finetune.report, run.dir / "loss_curve.json");

  // Inference is grapheme-only; the counter proves no phoneme computation
  // happens past this point.
  g2p.ResetCalls();
  std::vector<GenerationRecord> records = GenerateTemplateCompletions(
      lm, tokenizer, corpus, task, decoding, seed, kMethodJointTemplate);
  const std::uint64_t inference_calls = g2p.calls();
  if (inference_calls > 0) {
    TG_WARN() << "joint inference unexpectedly phonemized "
              << inference_calls << " inputs";
  }
  WriteGenerations(records, run.dir / "generations.jsonl");
  ReleaseRunLock(run.dir);

  return JointResult{std::move(run), std::move(records),
                     std::move(finetune.report), inference_calls};
}

}  // namespace twistgen
