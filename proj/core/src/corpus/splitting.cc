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

#include "twistgen/corpus/splitting.h"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "twistgen/common/error.h"
#include "twistgen/common/rng.h"

namespace twistgen {

uint64_t SplitRankKey(uint64_t seed, const std::string& id) {
  // The mixer step matters: raw FNV values of ids that share a long prefix
  // stay numerically close, which would cluster consecutive ids in one split.
  return SplitMix64(Fnv1a64(std::to_string(seed) + ":" + id));
}

void SplitCorpus(Corpus& corpus, const SplitRatios& ratios, uint64_t seed) {
  ratios.Validate();
  if (corpus.examples.empty()) throw DataError("cannot split an empty corpus");

  struct Ranked {
    uint64_t key;
    const std::string* id;
  };
  std::vector<Ranked> ranked;
  ranked.reserve(corpus.examples.size());
  for (const TwisterExample& ex : corpus.examples) {
    ranked.push_back({SplitRankKey(seed, ex.id), &ex.id});
  }
  std::sort(ranked.begin(), ranked.end(), [](const Ranked& a, const Ranked& b) {
    if (a.key != b.key) return a.key < b.key;
    return *a.id < *b.id;
  });

  const std::size_t n = ranked.size();
  const std::size_t n_val =
      static_cast<std::size_t>(std::floor(ratios.val * static_cast<double>(n)));
  const std::size_t n_test = static_cast<std::size_t>(
      std::floor(ratios.test * static_cast<double>(n)));
  const std::size_t n_train = n - n_val - n_test;

  std::unordered_map<std::string, Split> label;
  label.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Split s = Split::kTrain;
    if (i >= n_train + n_val) {
      s = Split::kTest;
    } else if (i >= n_train) {
      s = Split::kVal;
    }
    label[*ranked[i].id] = s;
  }
  for (TwisterExample& ex : corpus.examples) ex.split = label[ex.id];
}

SplitSizes CountSplits(const Corpus& corpus) {
  SplitSizes sizes;
  for (const TwisterExample& ex : corpus.examples) {
    switch (ex.split) {
      case Split::kTrain: ++sizes.train; break;
      case Split::kVal: ++sizes.val; break;
      case Split::kTest: ++sizes.test; break;
      case Split::kUnassigned: break;
    }
  }
  return sizes;
}

}  // namespace twistgen
