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

#include "twistgen/backends/embedder.h"

#include "twistgen/common/error.h"
#include "twistgen/common/rng.h"
#include "twistgen/common/strings.h"

namespace twistgen {

HashedNgramEmbedder::HashedNgramEmbedder(int dim) : dim_(dim) {
  if (dim <= 0) throw ConfigError("embedder dim must be positive");
}

std::string NormalizeText(std::string_view text) {
  std::vector<std::string> words;
  for (const std::string& tok : SplitWhitespace(text)) {
    std::string w = NormalizeWord(tok);
    if (!w.empty()) words.push_back(std::move(w));
  }
  return JoinWith(words, " ");
}

Eigen::VectorXd HashedNgramEmbedder::Embed(std::string_view text) const {
  const std::string padded = " " + NormalizeText(text) + " ";
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim_);
  for (std::size_t n = 2; n <= 4; ++n) {
    if (padded.size() < n) continue;
    for (std::size_t i = 0; i + n <= padded.size(); ++i) {
      const std::uint64_t h =
          Fnv1a64(std::string_view(padded.data() + i, n));
      const int idx = static_cast<int>(h % static_cast<std::uint64_t>(dim_));
      v[idx] += (h >> 63) == 0 ? 1.0 : -1.0;
    }
  }
  const double norm = v.norm();
  if (norm > 0.0) v /= norm;
  return v;
}

double HashedNgramEmbedder::Cosine(const Eigen::VectorXd& a,
                                   const Eigen::VectorXd& b) {
  return a.dot(b);
}

}  // namespace twistgen
