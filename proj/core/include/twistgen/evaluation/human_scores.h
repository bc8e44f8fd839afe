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

#ifndef TWISTGEN_EVALUATION_HUMAN_SCORES_H_
#define TWISTGEN_EVALUATION_HUMAN_SCORES_H_

#include <filesystem>
#include <string>
#include <vector>

namespace twistgen {

// Per-example human judgment, averaged over annotators.
struct HumanScore {
  std::string id;
  double difficulty = 0.0;  // 1-5 scale
  double fluency = 0.0;     // 1-5 scale
  int annotators = 0;
};

// Reads tab-separated lines `id<TAB>annotator<TAB>difficulty<TAB>fluency`
// (both scores integers in 1..5), averages the annotators of each id, and
// returns the rows sorted by id. Throws DataError on malformed lines or an
// empty file.
std::vector<HumanScore> LoadHumanScores(const std::filesystem::path& path);

}  // namespace twistgen

#endif  // TWISTGEN_EVALUATION_HUMAN_SCORES_H_
