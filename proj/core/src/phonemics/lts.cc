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

#include "twistgen/phonemics/lts.h"

#include <unordered_set>

#include "twistgen/phonemics/inventory.h"

namespace twistgen {
namespace {

bool IsVowelLetter(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
}

bool IsConsonantLetter(char c) {
  return c >= 'a' && c <= 'z' && !IsVowelLetter(c);
}

// Phonemes after which a final "s" is voiced.
bool IsVoiced(const std::string& sym) {
  static const std::unordered_set<std::string> kVoiced = {
      "b", "d", "ɡ", "v", "ð", "z", "ʒ", "dʒ", "m", "n", "ŋ", "l", "r",
      "w", "j", "iː", "i", "ɪ", "e", "ɛ", "æ", "ɑː", "ɒ", "ɔː", "ʊ",
      "uː", "ʌ", "ə", "ɜː", "ɚ", "eɪ", "aɪ", "ɔɪ", "aʊ", "oʊ", "ɪə",
      "eə", "ʊə"};
  return kVoiced.count(sym) > 0;
}

const char* LongVowel(char c) {
  switch (c) {
    case 'a': return "eɪ";
    case 'e': return "iː";
    case 'i': return "aɪ";
    case 'o': return "oʊ";
    case 'y': return "aɪ";
    default: return nullptr;  // 'u' handled separately ("j uː")
  }
}

const char* ShortVowel(char c) {
  switch (c) {
    case 'a': return "æ";
    case 'e': return "ɛ";
    case 'i': return "ɪ";
    case 'o': return "ɑː";
    case 'u': return "ʌ";
    default: return nullptr;
  }
}

}  // namespace

LtsResult LettersToSounds(std::string_view word) {
  LtsResult res;
  const std::string w(word);
  const std::size_t n = w.size();

  // Magic-e: vowel + single consonant + final silent 'e' lengthens the vowel
  // ("blame", "cube", "style").
  std::size_t long_pos = std::string::npos;
  std::size_t silent_e = std::string::npos;
  if (n >= 3 && w[n - 1] == 'e' && IsConsonantLetter(w[n - 2]) &&
      IsVowelLetter(w[n - 3])) {
    long_pos = n - 3;
    silent_e = n - 1;
  }

  auto emit = [&res](const char* symbols) {
    // symbols is a space-separated list like "k w".
    std::string cur;
    for (const char* p = symbols;; ++p) {
      if (*p == ' ' || *p == '\0') {
        if (!cur.empty()) res.symbols.push_back(cur);
        cur.clear();
        if (*p == '\0') break;
      } else {
        cur += *p;
      }
    }
  };
  auto at = [&w, n](std::size_t i, const char* lit) {
    std::string_view sv(lit);
    return i + sv.size() <= n && w.compare(i, sv.size(), lit) == 0;
  };

  std::size_t i = 0;
  while (i < n) {
    const char c = w[i];
    const bool at_start = i == 0;

    // Skip joiners and the flagged silent e.
    if (c == '\'' || c == '-') { ++i; continue; }
    if (i == silent_e) { ++i; continue; }

    // Trigraphs.
    if (at(i, "tch")) { emit("tʃ"); i += 3; continue; }
    if (at(i, "dge")) { emit("dʒ"); i += 3; continue; }
    if (at(i, "igh")) { emit("aɪ"); i += 3; continue; }

    // Digraphs: consonants.
    if (at(i, "ch")) { emit("tʃ"); i += 2; continue; }
    if (at(i, "sh")) { emit("ʃ"); i += 2; continue; }
    if (at(i, "th")) { emit("θ"); i += 2; continue; }
    if (at(i, "ph")) { emit("f"); i += 2; continue; }
    if (at(i, "wh")) { emit("w"); i += 2; continue; }
    if (at(i, "ck")) { emit("k"); i += 2; continue; }
    if (at(i, "ng")) { emit("ŋ"); i += 2; continue; }
    if (at(i, "qu")) { emit("k w"); i += 2; continue; }
    if (at_start && at(i, "wr")) { emit("r"); i += 2; continue; }
    if (at_start && at(i, "kn")) { emit("n"); i += 2; continue; }
    if (at(i, "gh")) { ++i; ++i; continue; }  // "light", "though": silent

    // Digraphs: vowels and r-colored vowels.
    if (at(i, "ee")) { emit("iː"); i += 2; continue; }
    if (at(i, "ea")) { emit("iː"); i += 2; continue; }
    if (at(i, "ai")) { emit("eɪ"); i += 2; continue; }
    if (at(i, "ay")) { emit("eɪ"); i += 2; continue; }
    if (at(i, "oa")) { emit("oʊ"); i += 2; continue; }
    if (at(i, "oo")) { emit("uː"); i += 2; continue; }
    if (at(i, "ou")) { emit("aʊ"); i += 2; continue; }
    if (at(i, "ow")) { emit("aʊ"); i += 2; continue; }
    if (at(i, "oi")) { emit("ɔɪ"); i += 2; continue; }
    if (at(i, "oy")) { emit("ɔɪ"); i += 2; continue; }
    if (at(i, "au")) { emit("ɔː"); i += 2; continue; }
    if (at(i, "aw")) { emit("ɔː"); i += 2; continue; }
    if (at(i, "ew")) { emit("uː"); i += 2; continue; }
    if (at(i, "ar")) { emit("ɑː r"); i += 2; continue; }
    if (at(i, "or")) { emit("ɔː r"); i += 2; continue; }
    if (at(i, "er")) {
      if (i + 2 == n) { emit("ɚ"); } else { emit("ɜː r"); }
      i += 2;
      continue;
    }
    if (at(i, "ir") || at(i, "ur")) { emit("ɜː r"); i += 2; continue; }

    // Consonant + "le" at word end: "little", "table".
    if (i + 2 == n && at(i, "le") && i > 0 && IsConsonantLetter(w[i - 1])) {
      emit("ə l");
      i += 2;
      continue;
    }

    // Single letters.
    switch (c) {
      case 'b': emit("b"); ++i; continue;
      case 'c':
        if (i + 1 < n && (w[i + 1] == 'e' || w[i + 1] == 'i' ||
                          w[i + 1] == 'y')) {
          emit("s");
        } else {
          emit("k");
        }
        ++i;
        continue;
      case 'd': emit("d"); ++i; continue;
      case 'f': emit("f"); ++i; continue;
      case 'g':
        if (i + 1 < n && (w[i + 1] == 'e' || w[i + 1] == 'i' ||
                          w[i + 1] == 'y')) {
          emit("dʒ");
        } else {
          emit("ɡ");
        }
        ++i;
        continue;
      case 'h': emit("h"); ++i; continue;
      case 'j': emit("dʒ"); ++i; continue;
      case 'k': emit("k"); ++i; continue;
      case 'l': emit("l"); ++i; continue;
      case 'm': emit("m"); ++i; continue;
      case 'n': emit("n"); ++i; continue;
      case 'p': emit("p"); ++i; continue;
      case 'r': emit("r"); ++i; continue;
      case 's': {
        // Final s (or s before the silent e) voices after a voiced sound.
        const bool final_s = i + 1 == n || (i + 2 == n && silent_e == n - 1);
        if (final_s && !res.symbols.empty() && IsVoiced(res.symbols.back())) {
          emit("z");
        } else {
          emit("s");
        }
        ++i;
        continue;
      }
      case 't': emit("t"); ++i; continue;
      case 'v': emit("v"); ++i; continue;
      case 'w': emit("w"); ++i; continue;
      case 'x': emit("k s"); ++i; continue;
      case 'z': emit("z"); ++i; continue;
      case 'y':
        if (at_start) {
          emit("j");
        } else if (i == long_pos) {
          emit("aɪ");
        } else if (i + 1 == n) {
          emit("i");
        } else {
          emit("ɪ");
        }
        ++i;
        continue;
      case 'a': case 'e': case 'i': case 'o': case 'u': {
        if (i == long_pos) {
          if (c == 'u') {
            emit("j uː");
          } else {
            emit(LongVowel(c));
          }
        } else if (c == 'e' && i + 1 == n && n > 2 && i > 0 &&
                   IsConsonantLetter(w[i - 1])) {
          // Unflagged final e after a consonant is silent ("table" tail).
        } else {
          emit(ShortVowel(c));
        }
        ++i;
        continue;
      }
      default:
        res.symbols.push_back(PhonemeInventory::kUnk);
        res.used_unk = true;
        ++i;
        continue;
    }
  }
  return res;
}

}  // namespace twistgen
