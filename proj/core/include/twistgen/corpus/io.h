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

#ifndef TWISTGEN_CORPUS_IO_H_
#define TWISTGEN_CORPUS_IO_H_

#include <filesystem>
#include <string>
#include <vector>

#include "twistgen/corpus/types.h"

namespace twistgen {

// Reads a line-delimited record file (one JSON object per line) with fields
// id, text, and optional non_tt_text / phonemes / prompt / keywords / split /
// source. Throws DataError with a line number on malformed records.
Corpus LoadCorpus(const std::filesystem::path& path);

void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path);

// One lowercase term per line; blanks and '#' comments skipped.
std::vector<std::string> LoadBlocklist(const std::filesystem::path& path);

struct RemovalEntry {
  std::string id;
  std::string reason;
};

// Plain-text lines "id<TAB>reason".
void WriteRemovalLog(const std::vector<RemovalEntry>& entries,
                     const std::filesystem::path& path);

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_IO_H_
