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

#ifndef TWISTGEN_CORPUS_PROMPTS_H_
#define TWISTGEN_CORPUS_PROMPTS_H_

#include <cstddef>
#include <string>
#include <string_view>

namespace twistgen {

// First n whitespace-delimited tokens joined by single spaces; all of them
// when the sentence is shorter. Throws DataError on empty/blank text.
std::string ExtractPrompt(std::string_view text, std::size_t n = 3);

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_PROMPTS_H_
