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

#ifndef TWISTGEN_BACKENDS_SYNONYMS_H_
#define TWISTGEN_BACKENDS_SYNONYMS_H_

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace twistgen {

// POS-aware synonym lexicon loaded from a TSV file with lines
//   word<TAB>TAG<TAB>syn1,syn2,...
// Synonyms are ranked: the first entry is the preferred substitute.
class SynonymLexicon {
 public:
  explicit SynonymLexicon(const std::filesystem::path& path);

  // Ranked synonyms for (lowercased word, tag); empty if none known.
  const std::vector<std::string>& Lookup(const std::string& word,
                                         const std::string& tag) const;

  std::size_t size() const { return table_.size(); }

 private:
  std::unordered_map<std::string, std::vector<std::string>> table_;
  std::vector<std::string> empty_;
};

}  // namespace twistgen

#endif  // TWISTGEN_BACKENDS_SYNONYMS_H_
