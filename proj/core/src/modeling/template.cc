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

#include "twistgen/modeling/template.h"

#include <string_view>

#include "twistgen/common/error.h"

namespace twistgen {
namespace {

constexpr std::string_view kBracketChars = "()<>[]{}";
constexpr std::string_view kSeparatorToken = "[SEP]";

}  // namespace

char TemplateOpen(TemplateMode mode) {
  switch (mode) {
    case TemplateMode::kG2G: return '(';
    case TemplateMode::kP2P: return '<';
    case TemplateMode::kG2P: return '[';
    case TemplateMode::kP2G: return '{';
  }
  throw ConfigError("unknown template mode");
}

char TemplateClose(TemplateMode mode) {
  switch (mode) {
    case TemplateMode::kG2G: return ')';
    case TemplateMode::kP2P: return '>';
    case TemplateMode::kG2P: return ']';
    case TemplateMode::kP2G: return '}';
  }
  throw ConfigError("unknown template mode");
}

std::string TemplateModeName(TemplateMode mode) {
  switch (mode) {
    case TemplateMode::kG2G: return "g2g";
    case TemplateMode::kP2P: return "p2p";
    case TemplateMode::kG2P: return "g2p";
    case TemplateMode::kP2G: return "p2g";
  }
  throw ConfigError("unknown template mode");
}

TemplateMode TemplateModeFromName(const std::string& name) {
  for (TemplateMode mode : kAllTemplateModes) {
    if (TemplateModeName(mode) == name) return mode;
  }
  throw ConfigError("unknown template mode: " + name);
}

bool ContainsReservedTemplateChars(std::string_view text) {
  if (text.find_first_of(kBracketChars) != std::string_view::npos) return true;
  return text.find(kSeparatorToken) != std::string_view::npos;
}

std::string StripReservedTemplateChars(std::string_view text) {
  std::string out(text);
  std::size_t pos = 0;
  while ((pos = out.find(kSeparatorToken)) != std::string::npos) {
    out.erase(pos, kSeparatorToken.size());
  }
  std::string cleaned;
  cleaned.reserve(out.size());
  for (char c : out) {
    if (kBracketChars.find(c) == std::string_view::npos) cleaned.push_back(c);
  }
  return cleaned;
}

TemplateInstance RenderTemplate(TemplateMode mode, std::string source,
                                std::string target) {
  if (source.empty() || target.empty()) {
    throw DataError("template source and target must be non-empty");
  }
  if (ContainsReservedTemplateChars(source)) {
    throw DataError("template source contains a reserved character: " +
                    source);
  }
  if (ContainsReservedTemplateChars(target)) {
    throw DataError("template target contains a reserved character: " +
                    target);
  }
  TemplateInstance instance;
  instance.mode = mode;
  instance.rendered.reserve(source.size() + target.size() +
                            kTemplateSeparator.size() + 2);
  instance.rendered.push_back(TemplateOpen(mode));
  instance.rendered.append(source);
  instance.rendered.append(kTemplateSeparator);
  instance.rendered.append(target);
  instance.rendered.push_back(TemplateClose(mode));
  instance.source = std::move(source);
  instance.target = std::move(target);
  return instance;
}

std::string RenderGenerationPrefix(TemplateMode mode,
                                   std::string_view source) {
  if (source.empty()) throw DataError("generation prefix needs a source");
  if (ContainsReservedTemplateChars(source)) {
    throw DataError("generation source contains a reserved character: " +
                    std::string(source));
  }
  std::string prefix;
  prefix.push_back(TemplateOpen(mode));
  prefix.append(source);
  prefix.append(" [SEP]");
  return prefix;
}

ParsedTemplate ParseTemplate(std::string_view rendered) {
  if (rendered.size() < 2) throw DataError("rendered template too short");
  ParsedTemplate parsed;
  bool known = false;
  for (TemplateMode mode : kAllTemplateModes) {
    if (rendered.front() == TemplateOpen(mode)) {
      parsed.mode = mode;
      known = true;
      break;
    }
  }
  if (!known) {
    throw DataError("rendered template has no known opening bracket: " +
                    std::string(rendered));
  }
  if (rendered.back() != TemplateClose(parsed.mode)) {
    throw DataError("rendered template bracket mismatch: " +
                    std::string(rendered));
  }
  const std::string_view inner = rendered.substr(1, rendered.size() - 2);
  const std::size_t sep = inner.find(kTemplateSeparator);
  if (sep == std::string_view::npos) {
    throw DataError("rendered template lacks a separator: " +
                    std::string(rendered));
  }
  if (inner.find(kTemplateSeparator, sep + 1) != std::string_view::npos) {
    throw DataError("rendered template has multiple separators: " +
                    std::string(rendered));
  }
  parsed.source = std::string(inner.substr(0, sep));
  parsed.target = std::string(inner.substr(sep + kTemplateSeparator.size()));
  return parsed;
}

}  // namespace twistgen
