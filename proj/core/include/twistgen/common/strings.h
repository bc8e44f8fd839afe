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

#ifndef TWISTGEN_COMMON_STRINGS_H_
#define TWISTGEN_COMMON_STRINGS_H_

#include <string>
#include <string_view>
#include <vector>

namespace twistgen {

// ASCII lowercase; bytes outside A-Z are left untouched (UTF-8 safe).
std::string Lowercase(std::string_view s);

std::string Trim(std::string_view s);

// Splits on runs of ASCII whitespace; no empty fields.
std::vector<std::string> SplitWhitespace(std::string_view s);

// Splits on a single delimiter; keeps empty fields.
std::vector<std::string> SplitOn(std::string_view s, char delim);

std::string JoinWith(const std::vector<std::string>& parts,
                     std::string_view sep);

// Word tokens for modeling: whitespace split, then leading/trailing
// punctuation is peeled off into separate tokens. Apostrophes and hyphens
// inside a word stay attached ("don't", "bed-bugs").
std::vector<std::string> TokenizeWords(std::string_view text);

// Strips leading/trailing punctuation and lowercases; "" if nothing remains.
std::string NormalizeWord(std::string_view token);

bool IsPunctToken(std::string_view token);

// Rebuilds a sentence from word/punctuation tokens: spaces between words,
// punctuation attached to the preceding word.
std::string DetokenizeWords(const std::vector<std::string>& tokens);

}  // namespace twistgen

#endif  // TWISTGEN_COMMON_STRINGS_H_
