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

#ifndef TWISTGEN_MODELING_FINETUNE_H_
#define TWISTGEN_MODELING_FINETUNE_H_

#include <string>
#include <vector>

#include "twistgen/corpus/keywords.h"
#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"
#include "twistgen/modeling/tasks.h"
#include "twistgen/phonemics/g2p.h"

namespace twistgen {

// Fine-tunes the model in place on raw text sequences (typically rendered
// templates). Unseen tokens are added to the vocabulary first. When
// mask_source_loss is set, tokens up to and including the separator are
// excluded from the loss (ablation; the default trains on the full
// rendering). Returns the loss curve.
LmTrainReport FinetuneCausal(NeuralLm& lm, const MixedTokenizer& tokenizer,
                             const std::vector<std::string>& sequences,
                             const LmConfig& config,
                             bool mask_source_loss = false);

struct PretrainedLm {
  NeuralLm lm;
  LmTrainReport report;
};

// Trains a causal LM from scratch over generic sentences; the vocabulary
// keeps tokens seen at least min_count times.
PretrainedLm PretrainGraphemeLm(const std::vector<std::string>& sentences,
                                const MixedTokenizer& tokenizer,
                                const LmConfig& config,
                                std::size_t min_count = 2);

// Trains the phoneme-space LM. For the prompt task this is plain causal
// modeling over phoneme renderings of the sentences; for the keyword task
// each sentence becomes a grapheme-to-grapheme-shaped template mapping its
// phonemized keywords to the phonemized sentence, so generation can start
// from keywords. Sentences whose phonemization fails are skipped and
// counted. The vocabulary always covers the full phoneme inventory.
PretrainedLm PretrainPhonemeLm(const std::vector<std::string>& sentences,
                               const G2pBackend& g2p,
                               const KeywordExtractor* keywords,
                               const MixedTokenizer& tokenizer,
                               const LmConfig& config, TaskSetting task);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_FINETUNE_H_
