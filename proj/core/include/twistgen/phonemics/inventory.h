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

#ifndef TWISTGEN_PHONEMICS_INVENTORY_H_
#define TWISTGEN_PHONEMICS_INVENTORY_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace twistgen {

// The IPA symbol inventory. Symbols are UTF-8 strings of one or two code
// points (affricates like "tʃ" and long vowels like "iː" are single units).
class PhonemeInventory {
 public:
  // Reserved symbol substituted for material no rule can transduce; it is in
  // the inventory file but never produced for regular English text.
  static constexpr const char* kUnk = "ʘ";

  explicit PhonemeInventory(const std::filesystem::path& path);
  explicit PhonemeInventory(std::vector<std::string> symbols);

  bool Contains(std::string_view symbol) const;

  // Greedy longest-match segmentation of a concatenated phoneme word like
  // "siːʃɛlz" into inventory symbols. Throws DataError when a position
  // matches no symbol.
  std::vector<std::string> ParseSymbols(std::string_view word) const;

  const std::vector<std::string>& symbols() const { return symbols_; }

 private:
  void Index();

  std::vector<std::string> symbols_;
  std::unordered_set<std::string> set_;
  std::size_t max_bytes_ = 0;
};

}  // namespace twistgen

#endif  // TWISTGEN_PHONEMICS_INVENTORY_H_
