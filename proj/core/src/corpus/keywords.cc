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

#include "twistgen/corpus/keywords.h"

#include <algorithm>
#include <cctype>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

bool HasAlpha(const std::string& s) {
  return std::any_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalpha(c) != 0;
  });
}

}  // namespace

KeywordExtractor::KeywordExtractor(const HashedNgramEmbedder* embedder,
                                   std::unordered_set<std::string> stopwords,
                                   KeywordOptions options)
    : embedder_(embedder),
      stopwords_(std::move(stopwords)),
      options_(options) {
  if (embedder_ == nullptr) throw ConfigError("keyword extractor needs an embedder");
  if (options_.k == 0) throw ConfigError("keyword extractor k must be positive");
}

std::vector<ScoredKeyword> KeywordExtractor::Extract(
    std::string_view text) const {
  std::vector<std::string> words;
  for (const std::string& tok : SplitWhitespace(text)) {
    std::string w = NormalizeWord(tok);
    if (!w.empty()) words.push_back(std::move(w));
  }
  if (words.empty()) throw DataError("cannot extract keywords from empty text");

  const Eigen::VectorXd doc = embedder_->Embed(text);
  std::vector<std::string> candidates;
  std::unordered_set<std::string> seen;
  auto is_content = [this](const std::string& w) {
    return stopwords_.count(w) == 0 && HasAlpha(w);
  };
  for (const std::string& w : words) {
    if (is_content(w) && seen.insert(w).second) candidates.push_back(w);
  }
  if (options_.use_bigrams) {
    for (std::size_t i = 0; i + 1 < words.size(); ++i) {
      if (!is_content(words[i]) || !is_content(words[i + 1])) continue;
      std::string bigram = words[i] + " " + words[i + 1];
      if (seen.insert(bigram).second) candidates.push_back(std::move(bigram));
    }
  }

  std::vector<ScoredKeyword> scored;
  scored.reserve(candidates.size());
  for (const std::string& cand : candidates) {
    scored.push_back(
        {cand, HashedNgramEmbedder::Cosine(embedder_->Embed(cand), doc)});
  }
  // Stable: equal scores keep first-occurrence order.
  std::stable_sort(scored.begin(), scored.end(),
                   [](const ScoredKeyword& a, const ScoredKeyword& b) {
                     return a.score > b.score;
                   });
  if (scored.size() > options_.k) scored.resize(options_.k);
  return scored;
}

std::vector<std::string> KeywordExtractor::ExtractTexts(
    std::string_view text) const {
  std::vector<std::string> out;
  for (ScoredKeyword& kw : Extract(text)) out.push_back(std::move(kw.text));
  return out;
}

std::unordered_set<std::string> LoadStopwords(
    const std::filesystem::path& path) {
  std::unordered_set<std::string> out;
  for (const std::string& line : ReadDataLines(path)) {
    out.insert(Lowercase(Trim(line)));
  }
  return out;
}

}  // namespace twistgen
