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

#include "twistgen/common/strings.h"

#include <cctype>

namespace twistgen {
namespace {

// Punctuation peeled off word edges. Apostrophes and hyphens are not peeled:
// they are part of words like "don't", "saints'" and "bed-bugs".
bool IsPeelPunct(char c) {
  switch (c) {
    case '.': case ',': case '!': case '?': case ';': case ':': case '"':
    case '(': case ')': case '[': case ']': case '{': case '}':
      return true;
    default:
      return false;
  }
}

}  // namespace

std::string Lowercase(std::string_view s) {
  std::string out(s);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string Trim(std::string_view s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> SplitWhitespace(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string> SplitOn(std::string_view s, char delim) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == delim) {
      out.emplace_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string JoinWith(const std::vector<std::string>& parts,
                     std::string_view sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> TokenizeWords(std::string_view text) {
  std::vector<std::string> out;
  for (const std::string& raw : SplitWhitespace(text)) {
    size_t b = 0, e = raw.size();
    std::vector<std::string> lead, trail;
    while (b < e && IsPeelPunct(raw[b])) {
      lead.emplace_back(1, raw[b]);
      ++b;
    }
    while (e > b && IsPeelPunct(raw[e - 1])) {
      trail.insert(trail.begin(), std::string(1, raw[e - 1]));
      --e;
    }
    for (auto& p : lead) out.push_back(std::move(p));
    if (e > b) out.push_back(raw.substr(b, e - b));
    for (auto& p : trail) out.push_back(std::move(p));
  }
  return out;
}

std::string NormalizeWord(std::string_view token) {
  size_t b = 0, e = token.size();
  while (b < e && IsPeelPunct(token[b])) ++b;
  while (e > b && IsPeelPunct(token[e - 1])) --e;
  return Lowercase(token.substr(b, e - b));
}

bool IsPunctToken(std::string_view token) {
  return token.size() == 1 && IsPeelPunct(token[0]);
}

std::string DetokenizeWords(const std::vector<std::string>& tokens) {
  std::string out;
  for (const std::string& tok : tokens) {
    if (out.empty() || IsPunctToken(tok)) {
      out += tok;
    } else {
      out += ' ';
      out += tok;
    }
  }
  return out;
}

}  // namespace twistgen
