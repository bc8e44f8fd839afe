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

#ifndef TWISTGEN_BACKENDS_EMBEDDER_H_
#define TWISTGEN_BACKENDS_EMBEDDER_H_

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace twistgen {

// Deterministic text embedder: hashed character n-grams (n = 2..4) over the
// normalized, space-padded UTF-8 bytes, signed-hash accumulated into a fixed
// dimension and L2-normalized. No training, no model files; identical output
// on every platform.
class HashedNgramEmbedder {
 public:
  static constexpr int kDefaultDim = 256;

  explicit HashedNgramEmbedder(int dim = kDefaultDim);

  // Unit-norm embedding (zero vector only for text with no n-grams).
  Eigen::VectorXd Embed(std::string_view text) const;

  int dim() const { return dim_; }

  // Dot product of two unit vectors; cosine similarity.
  static double Cosine(const Eigen::VectorXd& a, const Eigen::VectorXd& b);

 private:
  int dim_;
};

// Lowercases every word, strips edge punctuation, drops empties, and joins
// with single spaces. The embedder applies this before hashing.
std::string NormalizeText(std::string_view text);

}  // namespace twistgen

#endif  // TWISTGEN_BACKENDS_EMBEDDER_H_
