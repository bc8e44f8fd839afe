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

#ifndef TWISTGEN_EVALUATION_FLUENCY_H_
#define TWISTGEN_EVALUATION_FLUENCY_H_

#include <string_view>

#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"

namespace twistgen {

// Mean per-token negative log-likelihood (nats) of the sentence under the
// frozen pretrained language model; lower reads as more fluent. Throws
// DataError on empty or untokenizable text.
double Fluency(const NeuralLm& lm, const MixedTokenizer& tokenizer,
               std::string_view text);

}  // namespace twistgen

#endif  // TWISTGEN_EVALUATION_FLUENCY_H_
