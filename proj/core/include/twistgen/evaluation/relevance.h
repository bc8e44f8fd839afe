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

#ifndef TWISTGEN_EVALUATION_RELEVANCE_H_
#define TWISTGEN_EVALUATION_RELEVANCE_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "twistgen/backends/embedder.h"

namespace twistgen {

struct MatchScore {
  double precision = 0.0;
  double recall = 0.0;
  double f = 0.0;
};

// Token-embedding matching score between a reference string (the comma-
// joined keywords) and a candidate sentence. Both sides are split into
// normalized word tokens; precision is the mean over candidate tokens of the
// best cosine against any reference token, recall the converse, and the
// final score their harmonic mean. Optionally rescaled against a baseline
// measured on mismatched pairs so that random pairings sit near zero.
class RelevanceScorer {
 public:
  explicit RelevanceScorer(const HashedNgramEmbedder* embedder);

  // Raw precision / recall / F between two texts. Throws DataError when
  // either side has no usable tokens.
  MatchScore Match(std::string_view reference, std::string_view candidate) const;

  // Measures the mean raw F over `pairs` random (keywords, text) pairings
  // drawn from different rows and stores it as the rescaling baseline.
  // Throws DataError when fewer than two rows are given.
  void CalibrateBaseline(const std::vector<std::string>& keyword_strings,
                         const std::vector<std::string>& texts, uint64_t seed,
                         int pairs = 200);

  // Explicit baseline, for reloading a persisted calibration.
  void set_baseline(double baseline);
  double baseline() const { return baseline_; }

  // Rescaled score in [0,1]: (F - baseline) / (1 - baseline), clamped.
  // Throws DataError on an empty keyword list or empty text.
  double Score(const std::vector<std::string>& keywords,
               std::string_view text) const;

 private:
  const HashedNgramEmbedder* embedder_;
  double baseline_ = 0.0;
};

// Joins keywords with ", " — the synthetic reference sentence form.
std::string JoinKeywordsForRelevance(const std::vector<std::string>& keywords);

}  // namespace twistgen

#endif  // TWISTGEN_EVALUATION_RELEVANCE_H_
