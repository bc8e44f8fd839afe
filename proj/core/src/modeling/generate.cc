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

#include "twistgen/modeling/generate.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "twistgen/ml/sampling.h"

namespace twistgen {
namespace {

constexpr double kMaskedLogit = -1e30;

bool IsStopToken(const StopCriterion& stop, const std::string& token) {
  return std::find(stop.stop_tokens.begin(), stop.stop_tokens.end(), token) !=
         stop.stop_tokens.end();
}

std::vector<int> SampleContinuation(const NeuralLm& lm,
                                    const std::vector<int>& prefix_ids,
                                    const DecodingConfig& decoding,
                                    const StopCriterion& stop,
                                    std::mt19937_64& rng) {
  const Vocab& vocab = lm.vocab();
  std::vector<int> ids = prefix_ids;
  std::vector<int> generated;
  for (std::size_t i = 0; i < decoding.max_new_tokens; ++i) {
    Eigen::VectorXd logits = lm.NextLogits(ids);
    logits[vocab.unk_id()] = kMaskedLogit;
    logits[vocab.bos_id()] = kMaskedLogit;
    const int next =
        SampleNucleus(logits, decoding.top_p, decoding.temperature, rng);
    if (next == vocab.eos_id()) break;
    const std::string& token = vocab.Token(next);
    if (IsStopToken(stop, token)) {
      if (stop.include_stop) generated.push_back(next);
      break;
    }
    generated.push_back(next);
    ids.push_back(next);
  }
  return generated;
}

struct BeamHypothesis {
  std::vector<int> generated;
  double log_prob = 0.0;
  bool finished = false;
};

std::vector<int> BeamContinuation(const NeuralLm& lm,
                                  const std::vector<int>& prefix_ids,
                                  const DecodingConfig& decoding,
                                  const StopCriterion& stop) {
  const Vocab& vocab = lm.vocab();
  const std::size_t width = decoding.beam_width;
  std::vector<BeamHypothesis> beam(1);
  for (std::size_t step = 0; step < decoding.max_new_tokens; ++step) {
    std::vector<BeamHypothesis> candidates;
    bool any_open = false;
    for (const BeamHypothesis& hyp : beam) {
      if (hyp.finished) {
        candidates.push_back(hyp);
        continue;
      }
      any_open = true;
      std::vector<int> ids = prefix_ids;
      ids.insert(ids.end(), hyp.generated.begin(), hyp.generated.end());
      Eigen::VectorXd logits = lm.NextLogits(ids);
      logits[vocab.unk_id()] = kMaskedLogit;
      logits[vocab.bos_id()] = kMaskedLogit;
      // Stable log-softmax once per hypothesis.
      const double max = logits.maxCoeff();
      const double lse =
          max + std::log((logits.array() - max).exp().sum());
      std::vector<int> order(static_cast<std::size_t>(logits.size()));
      std::iota(order.begin(), order.end(), 0);
      std::partial_sort(
          order.begin(),
          order.begin() +
              std::min<std::ptrdiff_t>(static_cast<std::ptrdiff_t>(width),
                                       static_cast<std::ptrdiff_t>(order.size())),
          order.end(), [&logits](int a, int b) {
            if (logits[a] != logits[b]) return logits[a] > logits[b];
            return a < b;
          });
      for (std::size_t k = 0; k < width && k < order.size(); ++k) {
        const int next = order[k];
        BeamHypothesis ext = hyp;
        ext.log_prob += logits[next] - lse;
        if (next == vocab.eos_id()) {
          ext.finished = true;
        } else {
          const std::string& token = vocab.Token(next);
          if (IsStopToken(stop, token)) {
            if (stop.include_stop) ext.generated.push_back(next);
            ext.finished = true;
          } else {
            ext.generated.push_back(next);
          }
        }
        candidates.push_back(std::move(ext));
      }
    }
    if (!any_open) break;
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const BeamHypothesis& a, const BeamHypothesis& b) {
                       return a.log_prob > b.log_prob;
                     });
    if (candidates.size() > width) candidates.resize(width);
    beam = std::move(candidates);
  }
  // Pick by length-normalized score so short degenerate endings don't win
  // on raw sum alone.
  const BeamHypothesis* best = nullptr;
  double best_score = -std::numeric_limits<double>::infinity();
  for (const BeamHypothesis& hyp : beam) {
    const double len = static_cast<double>(std::max<std::size_t>(
        hyp.generated.size(), 1));
    const double score = hyp.log_prob / len;
    if (best == nullptr || score > best_score) {
      best = &hyp;
      best_score = score;
    }
  }
  return best == nullptr ? std::vector<int>{} : best->generated;
}

}  // namespace

GenerationOutput GenerateCausal(const NeuralLm& lm,
                                const MixedTokenizer& tokenizer,
                                std::string_view prefix,
                                const DecodingConfig& decoding,
                                const StopCriterion& stop,
                                std::mt19937_64& rng) {
  if (prefix.empty()) throw DataError("generation prefix is empty");
  decoding.Validate();
  const std::vector<std::string> prefix_tokens = tokenizer.Tokenize(prefix);
  if (prefix_tokens.empty()) {
    throw DataError("generation prefix has no tokens: " + std::string(prefix));
  }
  const std::vector<int> prefix_ids = lm.vocab().Encode(prefix_tokens);

  for (int attempt = 0; attempt < 2; ++attempt) {
    std::vector<int> generated;
    if (decoding.strategy == DecodingStrategy::kBeam) {
      generated = BeamContinuation(lm, prefix_ids, decoding, stop);
    } else {
      generated = SampleContinuation(lm, prefix_ids, decoding, stop, rng);
    }
    GenerationOutput out;
    out.completion = tokenizer.Detokenize(lm.vocab().Decode(generated));
    if (!out.completion.empty()) {
      std::vector<std::string> all = prefix_tokens;
      for (int id : generated) all.push_back(lm.vocab().Token(id));
      out.full_text = tokenizer.Detokenize(all);
      return out;
    }
  }
  throw EmptyGenerationError("empty completion after retry for prefix: " +
                             std::string(prefix));
}

}  // namespace twistgen
