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

#include "twistgen/backends/pos_tagger.h"

#include <algorithm>
#include <cctype>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

bool Contains(const std::vector<std::string>& tags, const std::string& tag) {
  return std::find(tags.begin(), tags.end(), tag) != tags.end();
}

bool IsCapitalized(const std::string& token) {
  return !token.empty() && std::isupper(static_cast<unsigned char>(token[0]));
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

std::string SuffixGuess(const std::string& word) {
  if (EndsWith(word, "ly")) return "ADV";
  if (EndsWith(word, "ed") || EndsWith(word, "ing")) return "VERB";
  return "NOUN";
}

}  // namespace

RuleBasedPosTagger::RuleBasedPosTagger(
    const std::filesystem::path& lexicon_path) {
  for (const std::string& line : ReadDataLines(lexicon_path)) {
    std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() != 2) {
      throw DataError("pos lexicon: expected 'word<TAB>tags' in line: " +
                      line);
    }
    std::vector<std::string> tags;
    for (const std::string& tag : SplitOn(fields[1], ',')) {
      std::string t = Trim(tag);
      if (!t.empty()) tags.push_back(t);
    }
    if (tags.empty()) {
      throw DataError("pos lexicon: no tags for word '" + fields[0] + "'");
    }
    lexicon_[Lowercase(fields[0])] = std::move(tags);
  }
  if (lexicon_.empty()) throw DataError("pos lexicon is empty");
}

const std::vector<std::string>* RuleBasedPosTagger::Candidates(
    const std::string& word) const {
  auto it = lexicon_.find(word);
  return it == lexicon_.end() ? nullptr : &it->second;
}

std::vector<std::string> RuleBasedPosTagger::TagSentence(
    const std::vector<std::string>& tokens) const {
  std::vector<std::string> tags(tokens.size(), "X");
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const std::string& token = tokens[i];
    if (IsPunctToken(token)) {
      tags[i] = "PUNCT";
      continue;
    }
    std::string lower = Lowercase(NormalizeWord(token));
    const std::vector<std::string>* cands = Candidates(lower);

    // Capitalized mid-sentence word: proper noun when plausible.
    bool mid_sentence = i > 0 && !IsPunctToken(tokens[i - 1]);
    if (mid_sentence && IsCapitalized(token)) {
      if (cands == nullptr || Contains(*cands, "PROPN")) {
        tags[i] = "PROPN";
        continue;
      }
    }

    if (cands == nullptr) {
      tags[i] = SuffixGuess(lower);
      continue;
    }

    std::string prev_tag = i > 0 ? tags[i - 1] : std::string();
    std::string prev_word = i > 0 ? Lowercase(NormalizeWord(tokens[i - 1]))
                                  : std::string();

    // "to" before a verb-capable word reads as an infinitive.
    if (prev_word == "to" && Contains(*cands, "VERB")) {
      tags[i] = "VERB";
      continue;
    }
    if (prev_tag == "DET") {
      // After a determiner: adjective if the following word can be a noun,
      // otherwise prefer the noun reading.
      if (Contains(*cands, "ADJ") && i + 1 < tokens.size()) {
        const std::vector<std::string>* next =
            Candidates(Lowercase(NormalizeWord(tokens[i + 1])));
        if (next != nullptr && Contains(*next, "NOUN")) {
          tags[i] = "ADJ";
          continue;
        }
      }
      if (Contains(*cands, "NOUN")) {
        tags[i] = "NOUN";
        continue;
      }
    }
    if (prev_tag == "ADJ" && Contains(*cands, "NOUN")) {
      tags[i] = "NOUN";
      continue;
    }
    tags[i] = (*cands)[0];
  }
  return tags;
}

}  // namespace twistgen
