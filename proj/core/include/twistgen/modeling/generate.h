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

#ifndef TWISTGEN_MODELING_GENERATE_H_
#define TWISTGEN_MODELING_GENERATE_H_

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "twistgen/common/error.h"
#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"
#include "twistgen/modeling/decoding.h"

namespace twistgen {

// Thrown when a model produces an empty completion twice in a row; callers
// that have a fallback (style transfer stage 2) catch this specifically.
class EmptyGenerationError : public BackendError {
 public:
  using BackendError::BackendError;
};

// Tokens that terminate generation, besides <eos>. include_stop keeps the
// terminating token in the output (sentence punctuation); the default drops
// it (template closing brackets).
struct StopCriterion {
  std::vector<std::string> stop_tokens;
  bool include_stop = false;
};

struct GenerationOutput {
  std::string completion;  // text after the prefix only
  std::string full_text;   // prefix and completion detokenized together
};

// Continues `prefix` under the decoding config: nucleus sampling draws from
// `rng`; beam search is deterministic and ignores it. The <unk> and <bos>
// tokens are never emitted. Retries once on an empty completion, then
// throws EmptyGenerationError.
GenerationOutput GenerateCausal(const NeuralLm& lm,
                                const MixedTokenizer& tokenizer,
                                std::string_view prefix,
                                const DecodingConfig& decoding,
                                const StopCriterion& stop,
                                std::mt19937_64& rng);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_GENERATE_H_
