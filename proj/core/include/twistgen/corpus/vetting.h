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

#ifndef TWISTGEN_CORPUS_VETTING_H_
#define TWISTGEN_CORPUS_VETTING_H_

#include <string>
#include <vector>

#include "twistgen/corpus/io.h"
#include "twistgen/corpus/types.h"

namespace twistgen {

struct VetOptions {
  double near_dup_threshold = 0.8;  // Jaccard over lowercased token sets
  int min_tokens = 4;               // whitespace tokens
  std::vector<std::string> blocklist;
};

struct VetResult {
  Corpus kept;
  std::vector<RemovalEntry> removed;
};

// Filters in order: blocklisted term, too few tokens, near-duplicate of an
// earlier survivor (first occurrence in file order wins). Idempotent.
VetResult VetCorpus(const Corpus& raw, const VetOptions& options);

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_VETTING_H_
