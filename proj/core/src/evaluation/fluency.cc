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

#include "twistgen/evaluation/fluency.h"

#include <string>
#include <vector>

#include "twistgen/common/error.h"

namespace twistgen {

double Fluency(const NeuralLm& lm, const MixedTokenizer& tokenizer,
               std::string_view text) {
  if (text.empty()) throw DataError("fluency: empty text");
  std::vector<std::string> tokens = tokenizer.Tokenize(text);
  if (tokens.empty()) throw DataError("fluency: text has no tokens");
  return lm.MeanNll(lm.vocab().Encode(tokens));
}

}  // namespace twistgen
