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

#include "twistgen/evaluation/relevance.h"

#include <algorithm>
#include <random>

#include "twistgen/common/error.h"
#include "twistgen/common/rng.h"
#include "twistgen/common/strings.h"
#include "twistgen/ml/sampling.h"

namespace twistgen {

namespace {

std::vector<std::string> NormalizedTokens(std::string_view text) {
  std::vector<std::string> out;
  for (const std::string& raw : SplitWhitespace(text)) {
    std::string norm = NormalizeWord(raw);
    if (!norm.empty()) out.push_back(norm);
  }
  return out;
}

}  // namespace

RelevanceScorer::RelevanceScorer(const HashedNgramEmbedder* embedder)
    : embedder_(embedder) {
  if (embedder_ == nullptr) {
    throw ConfigError("relevance scorer requires an embedder");
  }
}

MatchScore RelevanceScorer::Match(std::string_view reference,
                                  std::string_view candidate) const {
  std::vector<std::string> ref = NormalizedTokens(reference);
  std::vector<std::string> cand = NormalizedTokens(candidate);
  if (ref.empty()) throw DataError("relevance: reference has no tokens");
  if (cand.empty()) throw DataError("relevance: candidate has no tokens");

  std::vector<Eigen::VectorXd> ref_vecs, cand_vecs;
  ref_vecs.reserve(ref.size());
  cand_vecs.reserve(cand.size());
  for (const std::string& t : ref) ref_vecs.push_back(embedder_->Embed(t));
  for (const std::string& t : cand) cand_vecs.push_back(embedder_->Embed(t));

  auto best_against = [](const Eigen::VectorXd& v,
                         const std::vector<Eigen::VectorXd>& others) {
    double best = -1.0;
    for (const Eigen::VectorXd& o : others) {
      best = std::max(best, HashedNgramEmbedder::Cosine(v, o));
    }
    return best;
  };

  MatchScore score;
  for (const Eigen::VectorXd& c : cand_vecs) {
    score.precision += best_against(c, ref_vecs);
  }
  score.precision /= static_cast<double>(cand_vecs.size());
  for (const Eigen::VectorXd& r : ref_vecs) {
    score.recall += best_against(r, cand_vecs);
  }
  score.recall /= static_cast<double>(ref_vecs.size());
  double denom = score.precision + score.recall;
  score.f = denom == 0.0 ? 0.0 : 2.0 * score.precision * score.recall / denom;
  return score;
}

void RelevanceScorer::CalibrateBaseline(
    const std::vector<std::string>& keyword_strings,
    const std::vector<std::string>& texts, uint64_t seed, int pairs) {
  if (keyword_strings.size() != texts.size()) {
    throw DataError("relevance calibration: row count mismatch");
  }
  if (keyword_strings.size() < 2) {
    throw DataError("relevance calibration needs at least two rows");
  }
  if (pairs <= 0) throw ConfigError("relevance calibration: pairs must be > 0");
  std::mt19937_64 rng = MakeEngine(seed, "relevance-baseline");
  const std::size_t n = keyword_strings.size();
  double total = 0.0;
  int used = 0;
  for (int p = 0; p < pairs; ++p) {
    std::size_t a = static_cast<std::size_t>(UniformUnit(rng) * n) % n;
    std::size_t b = static_cast<std::size_t>(UniformUnit(rng) * (n - 1)) % (n - 1);
    if (b >= a) ++b;  // mismatched by construction
    try {
      total += Match(keyword_strings[a], texts[b]).f;
      ++used;
    } catch (const DataError&) {
      // Tokenless rows contribute nothing to the baseline.
    }
  }
  if (used == 0) throw DataError("relevance calibration: no scorable pairs");
  baseline_ = total / used;
}

void RelevanceScorer::set_baseline(double baseline) {
  if (baseline < 0.0 || baseline >= 1.0) {
    throw ConfigError("relevance baseline must lie in [0,1)");
  }
  baseline_ = baseline;
}

double RelevanceScorer::Score(const std::vector<std::string>& keywords,
                              std::string_view text) const {
  if (keywords.empty()) throw DataError("relevance: empty keyword list");
  MatchScore raw = Match(JoinKeywordsForRelevance(keywords), text);
  double rescaled = (raw.f - baseline_) / (1.0 - baseline_);
  return std::clamp(rescaled, 0.0, 1.0);
}

std::string JoinKeywordsForRelevance(const std::vector<std::string>& keywords) {
  std::string joined;
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    if (i > 0) joined += ", ";
    joined += keywords[i];
  }
  return joined;
}

}  // namespace twistgen
