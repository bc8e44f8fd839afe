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

#ifndef TWISTGEN_PHONEMICS_G2P_H_
#define TWISTGEN_PHONEMICS_G2P_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "twistgen/phonemics/inventory.h"
#include "twistgen/phonemics/phoneme_sequence.h"

namespace twistgen {

// Grapheme-to-phoneme backend. Deterministic: the same text must always
// produce the same sequence. Text is lowercased before transduction (the
// phoneme space carries no case); per-word trailing punctuation is carried
// through in place.
class G2pBackend {
 public:
  virtual ~G2pBackend() = default;

  // Throws DataError on empty text or untransducible material.
  virtual PhonemeSequence Phonemize(std::string_view text) const = 0;

  virtual const PhonemeInventory& inventory() const = 0;
};

// Pronunciation-lexicon lookup with letter-to-sound fallback for words the
// lexicon does not know. Words whose fallback needs the reserved unknown
// symbol are transduced with that symbol and counted, not dropped.
class LexiconG2p : public G2pBackend {
 public:
  LexiconG2p(const std::filesystem::path& lexicon_path,
             const PhonemeInventory* inventory);

  PhonemeSequence Phonemize(std::string_view text) const override;
  const PhonemeInventory& inventory() const override { return *inventory_; }

  bool InLexicon(const std::string& word) const {
    return lexicon_.count(word) > 0;
  }
  std::size_t lexicon_size() const { return lexicon_.size(); }
  // Words transduced with the reserved unknown symbol since construction.
  uint64_t unk_words() const { return unk_words_; }

 private:
  std::vector<std::string> PhonemizeWord(const std::string& word) const;

  const PhonemeInventory* inventory_;
  std::unordered_map<std::string, std::vector<std::string>> lexicon_;
  mutable uint64_t unk_words_ = 0;
};

// Pass-through wrapper that counts Phonemize calls; lets tests assert that a
// pipeline stage performed no grapheme-to-phoneme work at inference time.
class CountingG2p : public G2pBackend {
 public:
  explicit CountingG2p(const G2pBackend* inner) : inner_(inner) {}

  PhonemeSequence Phonemize(std::string_view text) const override {
    ++calls_;
    return inner_->Phonemize(text);
  }
  const PhonemeInventory& inventory() const override {
    return inner_->inventory();
  }

  uint64_t calls() const { return calls_; }
  void ResetCalls() { calls_ = 0; }

 private:
  const G2pBackend* inner_;
  mutable uint64_t calls_ = 0;
};

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_G2P_H_
