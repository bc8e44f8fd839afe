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

#ifndef TWISTGEN_PHONEMICS_RESTORE_H_
#define TWISTGEN_PHONEMICS_RESTORE_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>

namespace twistgen {

// Restores surface conventions after phoneme-space generation, which is all
// lowercase. Idempotent.
class RestorationBackend {
 public:
  virtual ~RestorationBackend() = default;
  virtual std::string Restore(std::string_view text) const = 0;
};

// Deterministic rules: capitalize the sentence-initial word and every word
// after .!?; capitalize known proper nouns anywhere (multi-word names like
// "new york" as a unit); standalone "i" becomes "I"; append a terminal
// period when the sentence does not already end with punctuation.
class RuleBasedRestorer : public RestorationBackend {
 public:
  explicit RuleBasedRestorer(const std::filesystem::path& proper_nouns_path);
  RuleBasedRestorer() = default;

  std::string Restore(std::string_view text) const override;

 private:
  // Lowercased entries; multi-word entries matched over adjacent tokens.
  std::unordered_set<std::string> proper_;
  std::size_t max_proper_words_ = 1;
};

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_RESTORE_H_
