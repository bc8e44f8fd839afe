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

#ifndef TWISTGEN_CORPUS_SPLITTING_H_
#define TWISTGEN_CORPUS_SPLITTING_H_

#include <cstdint>
#include <string>
#include <vector>

#include "twistgen/corpus/types.h"

namespace twistgen {

// Assigns train/val/test labels in place. Deterministic in (corpus ids,
// ratios, seed): every id is ranked by a hash of "<seed>:<id>" (ties broken
// by id), val and test take floor(ratio * N) examples each from the end of
// that ranking, and train takes the remaining prefix. Examples keep their
// original order; only the split field changes.
void SplitCorpus(Corpus& corpus, const SplitRatios& ratios, uint64_t seed);

// Rank key used by SplitCorpus; exposed for tests.
uint64_t SplitRankKey(uint64_t seed, const std::string& id);

// Counts per split label; {train, val, test}.
struct SplitSizes {
  std::size_t train = 0;
  std::size_t val = 0;
  std::size_t test = 0;
};
SplitSizes CountSplits(const Corpus& corpus);

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_SPLITTING_H_
