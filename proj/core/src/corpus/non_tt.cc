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

#include "twistgen/corpus/non_tt.h"

#include <cctype>

#include "twistgen/common/error.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

bool IsReplaceableTag(const std::string& tag) {
  return tag == "NOUN" || tag == "VERB" || tag == "ADJ";
}

bool IsSingleToken(const std::string& s) {
  return !s.empty() && s.find(' ') == std::string::npos;
}

std::string MatchCase(const std::string& replacement,
                      const std::string& original) {
  if (replacement.empty() || original.empty()) return replacement;
  if (std::isupper(static_cast<unsigned char>(original[0]))) {
    std::string out = replacement;
    out[0] = static_cast<char>(
        std::toupper(static_cast<unsigned char>(out[0])));
    return out;
  }
  return replacement;
}

}  // namespace

std::string MakeNonTwister(std::string_view text, const PosTagger& tagger,
                           const SynonymLexicon& lexicon) {
  if (Trim(text).empty()) throw DataError("cannot paraphrase empty text");
  std::vector<std::string> tokens = TokenizeWords(text);
  std::vector<std::string> tags = tagger.TagSentence(tokens);
  if (tags.size() != tokens.size()) {
    throw BackendError("tagger returned " + std::to_string(tags.size()) +
                       " tags for " + std::to_string(tokens.size()) +
                       " tokens");
  }
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!IsReplaceableTag(tags[i])) continue;
    const std::string lower = Lowercase(tokens[i]);
    for (const std::string& syn : lexicon.Lookup(lower, tags[i])) {
      if (IsSingleToken(syn) && syn != lower) {
        tokens[i] = MatchCase(syn, tokens[i]);
        break;
      }
    }
  }
  return DetokenizeWords(tokens);
}

}  // namespace twistgen
