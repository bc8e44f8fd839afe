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

#include "twistgen/ml/tokenizer.h"

#include <algorithm>

#include "twistgen/common/error.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

bool IsOpeningBracket(char c) {
  return c == '(' || c == '<' || c == '[' || c == '{';
}

bool IsClosingOrPunct(char c) {
  switch (c) {
    case ')': case '>': case ']': case '}':
    case '.': case ',': case '!': case '?': case ';': case ':': case '"':
      return true;
    default:
      return false;
  }
}

bool IsAsciiOnly(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c < 0x80;
  });
}

}  // namespace

MixedTokenizer::MixedTokenizer(const PhonemeInventory* inventory)
    : inventory_(inventory) {
  if (inventory_ == nullptr) throw ConfigError("tokenizer needs an inventory");
}

std::vector<std::string> MixedTokenizer::Tokenize(std::string_view text) const {
  std::vector<std::string> out;
  for (const std::string& chunk : SplitWhitespace(text)) {
    if (chunk == kSep) {
      out.push_back(kSep);
      continue;
    }
    std::size_t b = 0;
    std::size_t e = chunk.size();
    std::vector<std::string> trailing;
    // "[SEP]" is atomic, so peel brackets only when the core is not it.
    while (b < e && IsOpeningBracket(chunk[b]) &&
           chunk.compare(b, e - b, kSep) != 0) {
      out.emplace_back(1, chunk[b]);
      ++b;
    }
    while (e > b && IsClosingOrPunct(chunk[e - 1]) &&
           chunk.compare(b, e - b, kSep) != 0) {
      trailing.emplace(trailing.begin(), 1, chunk[e - 1]);
      --e;
    }
    const std::string core = chunk.substr(b, e - b);
    if (!core.empty()) {
      bool phoneme_word = false;
      if (!IsAsciiOnly(core)) {
        try {
          std::vector<std::string> symbols = inventory_->ParseSymbols(core);
          out.emplace_back(kWordMark);
          for (std::string& s : symbols) out.push_back(std::move(s));
          phoneme_word = true;
        } catch (const Error&) {
          phoneme_word = false;
        }
      }
      if (!phoneme_word) out.push_back(core);
    }
    for (std::string& t : trailing) out.push_back(std::move(t));
  }
  return out;
}

std::string MixedTokenizer::Detokenize(
    const std::vector<std::string>& tokens) const {
  std::string out;
  bool no_space_before_next = true;  // start of string
  bool in_phoneme_word = false;
  for (const std::string& tok : tokens) {
    if (tok == kWordMark) {
      if (!no_space_before_next) out += ' ';
      no_space_before_next = true;
      in_phoneme_word = true;
      continue;
    }
    const bool opening = tok.size() == 1 && IsOpeningBracket(tok[0]);
    const bool closing = tok.size() == 1 && IsClosingOrPunct(tok[0]);
    const bool symbol = in_phoneme_word && inventory_->Contains(tok);
    if (closing || symbol) {
      out += tok;
      if (closing) in_phoneme_word = false;
      no_space_before_next = false;
      continue;
    }
    if (!symbol) in_phoneme_word = false;
    if (!no_space_before_next) out += ' ';
    out += tok;
    no_space_before_next = opening;
  }
  return out;
}

}  // namespace twistgen
