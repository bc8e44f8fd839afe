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

#ifndef TWISTGEN_EVALUATION_CLASSIFIER_DATA_H_
#define TWISTGEN_EVALUATION_CLASSIFIER_DATA_H_

#include <filesystem>
#include <string>
#include <vector>

#include "twistgen/corpus/types.h"
#include "twistgen/phonemics/g2p.h"

namespace twistgen {

// One phonemized sentence with a difficulty label (1 = tongue twister).
struct LabeledPhonemes {
  std::string id;
  std::string phonemes;  // rendered phoneme string
  int label = 0;
  Split split = Split::kUnassigned;
};

struct ClassifierDataset {
  std::vector<LabeledPhonemes> items;
  int dropped_pairs = 0;      // twister/counterpart pairs lost to g2p failure
  int dropped_negatives = 0;  // generic sentences lost to g2p failure
};

// Builds the labeled phoneme dataset: positives are the corpus twisters,
// negatives their plain-sentence counterparts (same split as the twister)
// plus the supplied generic sentences (assigned to the train split). Stored
// phonemes are preferred; anything else is phonemized on the fly. When
// either side of a twister/counterpart pair fails to phonemize, both sides
// are dropped and counted.
ClassifierDataset BuildClassifierDataset(
    const Corpus& corpus, const std::vector<std::string>& generic_negatives,
    const G2pBackend& g2p);

// TSV persistence: id, label, split, rendered phonemes.
void SaveClassifierDataset(const ClassifierDataset& dataset,
                           const std::filesystem::path& path);
ClassifierDataset LoadClassifierDataset(const std::filesystem::path& path);

}  // namespace twistgen

#endif  // TWISTGEN_EVALUATION_CLASSIFIER_DATA_H_
