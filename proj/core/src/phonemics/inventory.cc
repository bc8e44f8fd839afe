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

#include "twistgen/phonemics/inventory.h"

#include <algorithm>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/strings.h"

namespace twistgen {

PhonemeInventory::PhonemeInventory(const std::filesystem::path& path)
    : PhonemeInventory(ReadDataLines(path)) {}

PhonemeInventory::PhonemeInventory(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  for (std::string& s : symbols_) s = Trim(s);
  symbols_.erase(std::remove_if(symbols_.begin(), symbols_.end(),
                                [](const std::string& s) { return s.empty(); }),
                 symbols_.end());
  if (symbols_.empty()) throw DataError("phoneme inventory is empty");
  Index();
}

void PhonemeInventory::Index() {
  for (const std::string& s : symbols_) {
    if (!set_.insert(s).second) {
      throw DataError("duplicate inventory symbol: " + s);
    }
    max_bytes_ = std::max(max_bytes_, s.size());
  }
}

bool PhonemeInventory::Contains(std::string_view symbol) const {
  return set_.count(std::string(symbol)) > 0;
}

std::vector<std::string> PhonemeInventory::ParseSymbols(
    std::string_view word) const {
  // Longest match in bytes equals longest match in code points here: any two
  // symbols matching at the same position are byte-prefixes of each other.
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t len = std::min(max_bytes_, word.size() - i);
    for (; len > 0; --len) {
      if (set_.count(std::string(word.substr(i, len)))) break;
    }
    if (len == 0) {
      throw DataError("unparseable phoneme material at '" +
                      std::string(word.substr(i)) + "' in '" +
                      std::string(word) + "'");
    }
    out.emplace_back(word.substr(i, len));
    i += len;
  }
  return out;
}

}  // namespace twistgen
