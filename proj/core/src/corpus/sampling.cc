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

#include "twistgen/corpus/sampling.h"

#include <numeric>
#include <sstream>

#include "twistgen/common/error.h"
#include "twistgen/common/rng.h"

namespace twistgen {
namespace {

// Unbiased bounded draw via rejection; avoids the library distributions so
// the sample is identical on every standard library implementation.
std::size_t UniformBelow(std::mt19937_64& rng, std::size_t bound) {
  const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

}  // namespace

std::vector<std::string> SampleNegatives(
    const std::vector<std::string>& generic_corpus, std::size_t n,
    uint64_t seed) {
  if (n > generic_corpus.size()) {
    std::ostringstream msg;
    msg << "cannot sample " << n << " sentences from a population of "
        << generic_corpus.size();
    throw DataError(msg.str());
  }
  if (n == 0) return {};

  std::vector<std::size_t> indices(generic_corpus.size());
  std::iota(indices.begin(), indices.end(), 0);
  std::mt19937_64 rng = MakeEngine(seed, "negatives");
  // Partial Fisher-Yates: only the first n positions are settled.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t j = i + UniformBelow(rng, indices.size() - i);
    std::swap(indices[i], indices[j]);
  }
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(generic_corpus[indices[i]]);
  return out;
}

}  // namespace twistgen
