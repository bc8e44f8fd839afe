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

#ifndef TWISTGEN_MODELING_G2G_H_
#define TWISTGEN_MODELING_G2G_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"
#include "twistgen/modeling/decoding.h"
#include "twistgen/modeling/run.h"
#include "twistgen/modeling/tasks.h"

namespace twistgen {

// Fine-tunes `lm` on grapheme-to-grapheme templates over the train split.
LmTrainReport FinetuneG2g(NeuralLm& lm, const Corpus& corpus, TaskSetting task,
                          const MixedTokenizer& tokenizer,
                          const LmConfig& config,
                          bool mask_source_loss = false);

// Shared single-model inference: per test example, complete the
// grapheme-template prefix and stop at the closing bracket. `method` keys
// the per-example random stream. Failures isolate into failed records.
std::vector<GenerationRecord> GenerateTemplateCompletions(
    const NeuralLm& lm, const MixedTokenizer& tokenizer, const Corpus& corpus,
    TaskSetting task, const DecodingConfig& decoding, std::uint64_t seed,
    const std::string& method);

struct G2gResult {
  MethodRun run;
  std::vector<GenerationRecord> generations;
  LmTrainReport finetune_report;
};

// One-shot fine-tune + generate, producing a complete run directory.
G2gResult RunG2g(const Corpus& corpus, TaskSetting task,
                 const NeuralLm& base_lm, const MixedTokenizer& tokenizer,
                 const LmConfig& finetune_config,
                 const DecodingConfig& decoding, std::uint64_t seed,
                 const std::filesystem::path& runs_root,
                 bool mask_source_loss = false);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_G2G_H_
