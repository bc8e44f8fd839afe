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

#ifndef TWISTGEN_PHONEMICS_LTS_H_
#define TWISTGEN_PHONEMICS_LTS_H_

#include <string>
#include <string_view>
#include <vector>

namespace twistgen {

struct LtsResult {
  std::vector<std::string> symbols;
  bool used_unk = false;  // some character had no rule
};

// Letter-to-sound rules for words missing from the pronunciation lexicon.
// English phonics: digraphs ("sh", "ch", "ee", ...), magic-e long vowels,
// soft c/g, r-colored vowels, voiced final s. Input should be lowercase;
// characters outside [a-z'-] map to the reserved unknown symbol.
LtsResult LettersToSounds(std::string_view word);

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_LTS_H_
