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

#ifndef TWISTGEN_CORPUS_KEYWORDS_H_
#define TWISTGEN_CORPUS_KEYWORDS_H_

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "twistgen/backends/embedder.h"

namespace twistgen {

struct ScoredKeyword {
  std::string text;
  double score = 0.0;  // cosine similarity to the whole sentence
};

// Ranks content words of a sentence by cosine similarity between the word
// embedding and the whole-sentence embedding. Candidates are distinct
// normalized unigrams in first-occurrence order (optionally also adjacent
// bigrams); stopwords and tokens without alphabetic characters are skipped.
// Ties keep occurrence order.
struct KeywordOptions {
  std::size_t k = 5;
  // Bigram candidates tend to crowd out the single words the downstream
  // task wants, so they are off by default.
  bool use_bigrams = false;
};

class KeywordExtractor {
 public:
  KeywordExtractor(const HashedNgramEmbedder* embedder,
                   std::unordered_set<std::string> stopwords,
                   KeywordOptions options = KeywordOptions());

  // Throws DataError on empty/blank text.
  std::vector<ScoredKeyword> Extract(std::string_view text) const;

  // Convenience: texts only, in rank order.
  std::vector<std::string> ExtractTexts(std::string_view text) const;

  const KeywordOptions& options() const { return options_; }

 private:
  const HashedNgramEmbedder* embedder_;
  std::unordered_set<std::string> stopwords_;
  KeywordOptions options_;
};

std::unordered_set<std::string> LoadStopwords(
    const std::filesystem::path& path);

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_KEYWORDS_H_
