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

#ifndef TWISTGEN_MODELING_PHONEME_PIPELINE_H_
#define TWISTGEN_MODELING_PHONEME_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"
#include "twistgen/modeling/decoding.h"
#include "twistgen/modeling/run.h"
#include "twistgen/modeling/tasks.h"
#include "twistgen/phonemics/g2p.h"
#include "twistgen/phonemics/p2g.h"
#include "twistgen/phonemics/restore.h"

namespace twistgen {

// Fine-tunes the phoneme-space model on phoneme renderings of the train
// twisters (keyword task: phonemized-keywords-to-phonemes templates).
LmTrainReport FinetunePhonemePipeline(NeuralLm& lm, const Corpus& corpus,
                                      TaskSetting task, const G2pBackend& g2p,
                                      const MixedTokenizer& tokenizer,
                                      const LmConfig& config);

// Full pipeline per test example: phonemize the input, continue it in
// phoneme space, transduce back to graphemes, restore casing and proper
// nouns. Every intermediate is persisted on the record.
std::vector<GenerationRecord> PhonemePipelineGenerate(
    const NeuralLm& lm, const G2pBackend& g2p, const P2gModel& p2g,
    const RestorationBackend& restorer, const MixedTokenizer& tokenizer,
    const Corpus& corpus, TaskSetting task, const DecodingConfig& decoding,
    std::uint64_t seed);

struct PhonemePipelineResult {
  MethodRun run;
  std::vector<GenerationRecord> generations;
  LmTrainReport finetune_report;
};

// One-shot fine-tune + generate, producing a complete run directory.
PhonemePipelineResult RunPhonemePipeline(
    const Corpus& corpus, TaskSetting task, const NeuralLm& phoneme_base_lm,
    const G2pBackend& g2p, const P2gModel& p2g,
    const RestorationBackend& restorer, const MixedTokenizer& tokenizer,
    const LmConfig& finetune_config, const DecodingConfig& decoding,
    std::uint64_t seed, const std::filesystem::path& runs_root);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_PHONEME_PIPELINE_H_
