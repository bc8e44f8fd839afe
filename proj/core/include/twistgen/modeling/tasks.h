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

#ifndef TWISTGEN_MODELING_TASKS_H_
#define TWISTGEN_MODELING_TASKS_H_

#include <string>
#include <vector>

#include "twistgen/corpus/types.h"

namespace twistgen {

// The two generation settings: complete a sentence prefix into a tongue
// twister, or build one around a keyword list.
enum class TaskSetting { kPrompt, kKeyword };

std::string TaskSettingName(TaskSetting task);  // "tt-prompt" / "tt-keyword"
TaskSetting TaskSettingFromName(const std::string& name);

struct TaskPair {
  std::string id;
  std::string source;  // prompt, or keywords joined by ", "
  std::string target;  // full tongue twister
};

// One pair per example: (prompt, text) or (joined keywords, text). Throws
// DataError naming the first example that lacks the required field.
std::vector<TaskPair> BuildTaskPairs(const Corpus& corpus, TaskSetting task);

// Same, restricted to one split.
std::vector<TaskPair> BuildTaskPairs(const Corpus& corpus, TaskSetting task,
                                     Split split);

// Joins keywords with ", " (the source form used everywhere).
std::string JoinKeywords(const std::vector<std::string>& keywords);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_TASKS_H_
