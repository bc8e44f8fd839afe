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

#ifndef TWISTGEN_MODELING_TEMPLATE_H_
#define TWISTGEN_MODELING_TEMPLATE_H_

#include <array>
#include <string>
#include <string_view>

namespace twistgen {

// The four sequence renderings a model is trained on. Each mode pairs a
// source with a target inside a mode-specific bracket pair, so one model
// can learn all four mappings from the delimiters alone:
//   G2G (grapheme -> grapheme)  "(source [SEP] target)"
//   P2P (phoneme  -> phoneme)   "<source [SEP] target>"
//   G2P (grapheme -> phoneme)   "[source [SEP] target]"
//   P2G (phoneme  -> grapheme)  "{source [SEP] target}"
enum class TemplateMode { kG2G, kP2P, kG2P, kP2G };

inline constexpr std::array<TemplateMode, 4> kAllTemplateModes = {
    TemplateMode::kG2G, TemplateMode::kP2P, TemplateMode::kG2P,
    TemplateMode::kP2G};

// Separator literal between source and target inside a rendered template.
inline constexpr std::string_view kTemplateSeparator = " [SEP] ";

char TemplateOpen(TemplateMode mode);
char TemplateClose(TemplateMode mode);
std::string TemplateModeName(TemplateMode mode);  // "g2g", "p2p", ...
TemplateMode TemplateModeFromName(const std::string& name);

struct TemplateInstance {
  TemplateMode mode = TemplateMode::kG2G;
  std::string source;
  std::string target;
  std::string rendered;
};

// True when the text contains a bracket character or the separator token,
// which would make a rendered template ambiguous.
bool ContainsReservedTemplateChars(std::string_view text);

// Strips bracket characters and separator tokens; used to make generated
// text safe to re-embed in a template. Corpus data is validated instead.
std::string StripReservedTemplateChars(std::string_view text);

// rendered = open + source + " [SEP] " + target + close. Throws DataError
// when source or target contains reserved characters or is empty.
TemplateInstance RenderTemplate(TemplateMode mode, std::string source,
                                std::string target);

// Generation-time prefix: open + source + " [SEP]" (the model completes
// the target and the closing bracket).
std::string RenderGenerationPrefix(TemplateMode mode, std::string_view source);

struct ParsedTemplate {
  TemplateMode mode = TemplateMode::kG2G;
  std::string source;
  std::string target;
};

// Inverse of RenderTemplate. Throws DataError on an unknown or unmatched
// bracket pair or when the separator is missing or ambiguous.
ParsedTemplate ParseTemplate(std::string_view rendered);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_TEMPLATE_H_
