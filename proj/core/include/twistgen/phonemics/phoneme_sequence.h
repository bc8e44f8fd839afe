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

#ifndef TWISTGEN_PHONEMICS_PHONEME_SEQUENCE_H_
#define TWISTGEN_PHONEMICS_PHONEME_SEQUENCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "twistgen/phonemics/inventory.h"

namespace twistgen {

// A sentence in phoneme space: word units of IPA symbols, with the word's
// trailing punctuation (if any) kept alongside so it can be carried through
// phoneme-space processing in place.
struct PhonemeSequence {
  struct Word {
    std::vector<std::string> symbols;
    std::string trailing_punct;  // "" when none
  };
  std::vector<Word> words;

  bool empty() const { return words.empty(); }
  std::size_t NumSymbols() const;

  // "ʃiː sɛlz" form: symbols concatenated per word, words joined by single
  // spaces, punctuation reattached ("tʃuːz?").
  std::string Render() const;

  // Inverse of Render for sequences over the inventory.
  static PhonemeSequence Parse(std::string_view text,
                               const PhonemeInventory& inventory);

  bool operator==(const PhonemeSequence& other) const;
};

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_PHONEME_SEQUENCE_H_
