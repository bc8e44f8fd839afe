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

#include "twistgen/corpus/prompts.h"

#include "twistgen/common/error.h"
#include "twistgen/common/strings.h"

namespace twistgen {

std::string ExtractPrompt(std::string_view text, std::size_t n) {
  std::vector<std::string> tokens = SplitWhitespace(text);
  if (tokens.empty()) throw DataError("cannot extract a prompt from empty text");
  if (tokens.size() > n) tokens.resize(n);
  return JoinWith(tokens, " ");
}

}  // namespace twistgen
