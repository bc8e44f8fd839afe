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

#ifndef TWISTGEN_BACKENDS_POS_TAGGER_H_
#define TWISTGEN_BACKENDS_POS_TAGGER_H_

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace twistgen {

// Tag set: NOUN, VERB, ADJ, ADV, PROPN, DET, PRON, ADP, PART, CONJ, AUX,
// NUM, INTJ, PUNCT, X (unknown).
class PosTagger {
 public:
  virtual ~PosTagger() = default;

  // One tag per input token. Tokens are surface forms (cased, possibly with
  // attached punctuation already peeled by the caller).
  virtual std::vector<std::string> TagSentence(
      const std::vector<std::string>& tokens) const = 0;
};

// Lexicon + context-rule tagger. The lexicon maps a lowercased word to an
// ordered list of candidate tags (most likely first); context rules pick
// among candidates:
//   - "to" + verb-capable word        -> VERB
//   - after DET: prefer ADJ when the next word can be a noun, else NOUN
//   - after ADJ: prefer NOUN
//   - capitalized mid-sentence        -> PROPN (if word can be one or is OOV)
//   - OOV fallback by suffix (-ly ADV, -ed/-ing VERB, -s NOUN, else NOUN)
class RuleBasedPosTagger : public PosTagger {
 public:
  explicit RuleBasedPosTagger(const std::filesystem::path& lexicon_path);

  std::vector<std::string> TagSentence(
      const std::vector<std::string>& tokens) const override;

  // Candidate tags for a lowercased word; empty if OOV.
  const std::vector<std::string>* Candidates(const std::string& word) const;

 private:
  std::unordered_map<std::string, std::vector<std::string>> lexicon_;
};

}  // namespace twistgen

#endif  // TWISTGEN_BACKENDS_POS_TAGGER_H_
