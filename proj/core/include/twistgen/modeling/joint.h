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

#ifndef TWISTGEN_MODELING_JOINT_H_
#define TWISTGEN_MODELING_JOINT_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"
#include "twistgen/modeling/decoding.h"
#include "twistgen/modeling/run.h"
#include "twistgen/modeling/tasks.h"
#include "twistgen/modeling/template.h"
#include "twistgen/phonemics/g2p.h"

namespace twistgen {

struct JointExample {
  std::string id;
  std::string source;            // prompt or joined keywords
  std::string phonemized_source;
  std::string text;              // full tongue twister
  std::string phonemes;          // rendered phoneme string of the text
};

// Exactly four template renderings per example, in fixed direction order.
std::vector<TemplateInstance> BuildJointTrainingSet(
    const std::vector<JointExample>& examples);

struct JointFinetune {
  LmTrainReport report;
  std::size_t sequences = 0;  // 4N shuffled template instances
};

// Builds the joint multi-direction training set (phonemizing with `g2p`),
// shuffles it, and fine-tunes `lm` on it.
JointFinetune FinetuneJointTemplate(NeuralLm& lm, const Corpus& corpus,
                                    TaskSetting task, const G2pBackend& g2p,
                                    const MixedTokenizer& tokenizer,
                                    const LmConfig& config,
                                    std::uint64_t seed);

struct JointResult {
  MethodRun run;
  std::vector<GenerationRecord> generations;
  LmTrainReport finetune_report;
  std::uint64_t g2p_calls_during_inference = 0;
};

// One-shot fine-tune + generate. Inference is grapheme-only; the counting
// wrapper proves no phoneme conversion happens after training.
JointResult RunJointTemplate(const Corpus& corpus, TaskSetting task,
                             const NeuralLm& base_lm, CountingG2p& g2p,
                             const MixedTokenizer& tokenizer,
                             const LmConfig& finetune_config,
                             const DecodingConfig& decoding,
                             std::uint64_t seed,
                             const std::filesystem::path& runs_root);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_JOINT_H_
