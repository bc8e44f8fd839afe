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

#ifndef TWISTGEN_PHONEMICS_P2G_DATASET_H_
#define TWISTGEN_PHONEMICS_P2G_DATASET_H_

#include <filesystem>
#include <string>
#include <vector>

#include "twistgen/phonemics/g2p.h"
#include "twistgen/phonemics/phoneme_sequence.h"

namespace twistgen {

// Sentence-level pair for phoneme→grapheme training.
struct TransductionPair {
  PhonemeSequence phonemes;
  std::string text;
};

struct P2gDataset {
  std::vector<TransductionPair> pairs;
  std::size_t skipped = 0;  // sentences whose phonemization failed
};

// One pair per sentence; failing sentences are skipped and counted.
P2gDataset BuildP2gDataset(const std::vector<std::string>& sentences,
                           const G2pBackend& g2p);

// Line-delimited records {"phonemes": rendered, "text": ...}.
void SaveP2gDataset(const P2gDataset& dataset,
                    const std::filesystem::path& path);
P2gDataset LoadP2gDataset(const std::filesystem::path& path,
                          const PhonemeInventory& inventory);

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_P2G_DATASET_H_
