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

#include "twistgen/backends/synonyms.h"

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/strings.h"

namespace twistgen {

SynonymLexicon::SynonymLexicon(const std::filesystem::path& path) {
  for (const std::string& line : ReadDataLines(path)) {
    std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() != 3) {
      throw DataError("synonym lexicon: expected 'word<TAB>TAG<TAB>syns': " +
                      line);
    }
    std::vector<std::string> syns;
    for (const std::string& syn : SplitOn(fields[2], ',')) {
      std::string s = Trim(syn);
      if (!s.empty()) syns.push_back(Lowercase(s));
    }
    table_[Lowercase(fields[0]) + "\t" + Trim(fields[1])] = std::move(syns);
  }
  if (table_.empty()) throw DataError("synonym lexicon is empty");
}

const std::vector<std::string>& SynonymLexicon::Lookup(
    const std::string& word, const std::string& tag) const {
  auto it = table_.find(Lowercase(word) + "\t" + tag);
  return it == table_.end() ? empty_ : it->second;
}

}  // namespace twistgen
