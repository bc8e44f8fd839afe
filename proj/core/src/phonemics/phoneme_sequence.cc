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

#include "twistgen/phonemics/phoneme_sequence.h"

#include "twistgen/common/error.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

bool IsTrailingPunct(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':': case '"':
    case ')': case ']': case '}':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::size_t PhonemeSequence::NumSymbols() const {
  std::size_t n = 0;
  for (const Word& w : words) n += w.symbols.size();
  return n;
}

std::string PhonemeSequence::Render() const {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (i > 0) out += ' ';
    for (const std::string& s : words[i].symbols) out += s;
    out += words[i].trailing_punct;
  }
  return out;
}

PhonemeSequence PhonemeSequence::Parse(std::string_view text,
                                       const PhonemeInventory& inventory) {
  PhonemeSequence seq;
  for (const std::string& tok : SplitWhitespace(text)) {
    std::size_t e = tok.size();
    while (e > 0 && IsTrailingPunct(tok[e - 1])) --e;
    Word word;
    word.trailing_punct = tok.substr(e);
    if (e > 0) word.symbols = inventory.ParseSymbols(tok.substr(0, e));
    seq.words.push_back(std::move(word));
  }
  return seq;
}

bool PhonemeSequence::operator==(const PhonemeSequence& other) const {
  if (words.size() != other.words.size()) return false;
  for (std::size_t i = 0; i < words.size(); ++i) {
    if (words[i].symbols != other.words[i].symbols ||
        words[i].trailing_punct != other.words[i].trailing_punct) {
      return false;
    }
  }
  return true;
}

}  // namespace twistgen
