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

#ifndef TWISTGEN_ML_TOKENIZER_H_
#define TWISTGEN_ML_TOKENIZER_H_

#include <string>
#include <string_view>
#include <vector>

#include "twistgen/phonemics/inventory.h"

namespace twistgen {

// Tokenizer for model sequences that mix grapheme text, phoneme renderings,
// template brackets, and the separator literal:
//   - whitespace-delimited chunks; "[SEP]" is one token;
//   - leading "(<[{" and trailing ")>]}" and sentence punctuation peel off
//     as single-character tokens;
//   - a chunk that segments fully into IPA inventory symbols (and is not
//     plain ASCII) becomes a word-marker token "▁" followed by one token
//     per symbol;
//   - anything else is one grapheme token, case preserved.
// Detokenize inverts this: ▁-runs concatenate, opening brackets attach to
// the next token, closing brackets and punctuation to the previous one.
class MixedTokenizer {
 public:
  static constexpr const char* kWordMark = "▁";
  static constexpr const char* kSep = "[SEP]";

  explicit MixedTokenizer(const PhonemeInventory* inventory);

  std::vector<std::string> Tokenize(std::string_view text) const;
  std::string Detokenize(const std::vector<std::string>& tokens) const;

  const PhonemeInventory& inventory() const { return *inventory_; }

 private:
  const PhonemeInventory* inventory_;
};

}  // namespace twistgen

#endif  // TWISTGEN_ML_TOKENIZER_H_
