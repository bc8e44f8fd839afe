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

#ifndef TWISTGEN_MODELING_STYLE_TRANSFER_H_
#define TWISTGEN_MODELING_STYLE_TRANSFER_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "twistgen/corpus/keywords.h"
#include "twistgen/corpus/types.h"
#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"
#include "twistgen/modeling/decoding.h"
#include "twistgen/modeling/run.h"
#include "twistgen/modeling/tasks.h"

namespace twistgen {

// Stage-1 model for the keyword task: keywords-to-plain-sentence templates
// built from generic sentences and their extracted keywords.
LmTrainReport TrainKeywordToText(NeuralLm& lm,
                                 const std::vector<std::string>& sentences,
                                 const KeywordExtractor& keywords,
                                 const MixedTokenizer& tokenizer,
                                 const LmConfig& config);

// Stage-2 model: plain-to-twister templates over parallel pairs.
LmTrainReport TrainTwisterizer(
    NeuralLm& lm,
    const std::vector<std::pair<std::string, std::string>>& parallel,
    const MixedTokenizer& tokenizer, const LmConfig& config);

// (plain counterpart, twister) pairs of one split; examples without a
// counterpart are skipped.
std::vector<std::pair<std::string, std::string>> TwisterizerPairs(
    const Corpus& corpus, Split split);

// Two-stage inference: stage 1 drafts a plain sentence (prompt
// continuation or keyword-to-text), stage 2 rewrites it through the
// twisterizer with deterministic beam search; an empty rewrite falls back
// to the stage-1 draft.
std::vector<GenerationRecord> StyleTransferGenerate(
    const NeuralLm& stage1_lm, const NeuralLm& twisterizer,
    const MixedTokenizer& tokenizer, const Corpus& corpus, TaskSetting task,
    const DecodingConfig& decoding, std::uint64_t seed);

struct StyleTransferResult {
  MethodRun run;
  std::vector<GenerationRecord> generations;
};

// One-shot run over already-trained stage models; both checkpoints are
// copied into the run directory.
StyleTransferResult RunStyleTransfer(
    const Corpus& corpus, TaskSetting task, const NeuralLm& stage1_lm,
    const NeuralLm& twisterizer, const MixedTokenizer& tokenizer,
    const DecodingConfig& decoding, std::uint64_t seed,
    const std::filesystem::path& runs_root);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_STYLE_TRANSFER_H_
