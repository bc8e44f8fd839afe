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

#include "twistgen/phonemics/restore.h"

#include <algorithm>
#include <cctype>
#include <vector>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

std::string CapitalizeFirst(const std::string& word) {
  std::string out = word;
  if (!out.empty()) {
    out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  }
  return out;
}

bool EndsSentence(const std::string& token) {
  return token == "." || token == "!" || token == "?";
}

}  // namespace

RuleBasedRestorer::RuleBasedRestorer(
    const std::filesystem::path& proper_nouns_path) {
  for (const std::string& line : ReadDataLines(proper_nouns_path)) {
    std::string entry = Lowercase(Trim(line));
    if (entry.empty()) continue;
    max_proper_words_ =
        std::max(max_proper_words_, SplitWhitespace(entry).size());
    proper_.insert(std::move(entry));
  }
}

std::string RuleBasedRestorer::Restore(std::string_view text) const {
  if (Trim(text).empty()) throw DataError("cannot restore empty text");
  std::vector<std::string> tokens = TokenizeWords(text);

  // Proper nouns, longest span first so "new york" wins over "york".
  for (std::size_t span = max_proper_words_; span >= 1; --span) {
    for (std::size_t i = 0; i + span <= tokens.size(); ++i) {
      std::vector<std::string> lowered;
      bool word_span = true;
      for (std::size_t j = i; j < i + span; ++j) {
        if (IsPunctToken(tokens[j])) {
          word_span = false;
          break;
        }
        lowered.push_back(Lowercase(tokens[j]));
      }
      if (!word_span) continue;
      if (proper_.count(JoinWith(lowered, " "))) {
        for (std::size_t j = i; j < i + span; ++j) {
          tokens[j] = CapitalizeFirst(tokens[j]);
        }
      }
    }
  }

  bool sentence_start = true;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (IsPunctToken(tokens[i])) {
      if (EndsSentence(tokens[i])) sentence_start = true;
      continue;
    }
    if (sentence_start) tokens[i] = CapitalizeFirst(tokens[i]);
    if (Lowercase(tokens[i]) == "i") tokens[i] = "I";
    sentence_start = false;
  }

  if (tokens.empty() || !EndsSentence(tokens.back())) {
    tokens.push_back(".");
  }
  return DetokenizeWords(tokens);
}

}  // namespace twistgen
