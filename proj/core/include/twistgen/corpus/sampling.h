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

#ifndef TWISTGEN_CORPUS_SAMPLING_H_
#define TWISTGEN_CORPUS_SAMPLING_H_

#include <cstdint>
#include <string>
#include <vector>

namespace twistgen {

// Draws n distinct sentences without replacement, deterministically for a
// fixed seed. Throws DataError if n exceeds the population size. Used to add
// plain-text negatives to the difficulty-classifier dataset.
std::vector<std::string> SampleNegatives(
    const std::vector<std::string>& generic_corpus, std::size_t n,
    uint64_t seed);

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_SAMPLING_H_
