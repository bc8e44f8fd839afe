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

#include "twistgen/phonemics/g2p.h"

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/log.h"
#include "twistgen/common/strings.h"
#include "twistgen/phonemics/lts.h"

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

bool IsLeadingPunct(char c) {
  switch (c) {
    case '"': case '(': case '[': case '{':
      return true;
    default:
      return false;
  }
}

}  // namespace

LexiconG2p::LexiconG2p(const std::filesystem::path& lexicon_path,
                       const PhonemeInventory* inventory)
    : inventory_(inventory) {
  if (inventory_ == nullptr) throw ConfigError("g2p needs an inventory");
  for (const std::string& line : ReadDataLines(lexicon_path)) {
    std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() != 2) {
      throw DataError("pronunciation lexicon: expected 'word<TAB>symbols': " +
                      line);
    }
    std::vector<std::string> symbols = SplitWhitespace(fields[1]);
    for (const std::string& s : symbols) {
      if (!inventory_->Contains(s)) {
        throw DataError("pronunciation lexicon: symbol '" + s +
                        "' for word '" + fields[0] +
                        "' is not in the inventory");
      }
    }
    if (symbols.empty()) {
      throw DataError("pronunciation lexicon: no symbols for '" + fields[0] +
                      "'");
    }
    lexicon_[Lowercase(fields[0])] = std::move(symbols);
  }
  if (lexicon_.empty()) throw DataError("pronunciation lexicon is empty");
}

std::vector<std::string> LexiconG2p::PhonemizeWord(
    const std::string& word) const {
  auto it = lexicon_.find(word);
  if (it != lexicon_.end()) return it->second;
  LtsResult lts = LettersToSounds(word);
  if (lts.used_unk) {
    ++unk_words_;
    TG_WARN() << "g2p fallback used the unknown symbol for '" << word << "'";
  }
  if (lts.symbols.empty()) {
    throw DataError("g2p produced no symbols for '" + word + "'");
  }
  return lts.symbols;
}

PhonemeSequence LexiconG2p::Phonemize(std::string_view text) const {
  PhonemeSequence seq;
  for (const std::string& tok : SplitWhitespace(text)) {
    std::size_t b = 0;
    std::size_t e = tok.size();
    while (b < e && IsLeadingPunct(tok[b])) ++b;  // no phoneme-space slot
    while (e > b && IsTrailingPunct(tok[e - 1])) --e;
    PhonemeSequence::Word word;
    word.trailing_punct = tok.substr(e);
    if (e > b) word.symbols = PhonemizeWord(Lowercase(tok.substr(b, e - b)));
    if (!word.symbols.empty() || !word.trailing_punct.empty()) {
      seq.words.push_back(std::move(word));
    }
  }
  if (seq.empty()) throw DataError("cannot phonemize empty text");
  return seq;
}

}  // namespace twistgen
