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

#include "twistgen/modeling/tasks.h"

#include "twistgen/common/error.h"

namespace twistgen {
namespace {

std::vector<TaskPair> BuildPairs(const Corpus& corpus, TaskSetting task,
                                 bool filter, Split split) {
  std::vector<TaskPair> pairs;
  for (const TwisterExample& example : corpus.examples) {
    if (filter && example.split != split) continue;
    TaskPair pair;
    pair.id = example.id;
    pair.target = example.text;
    if (task == TaskSetting::kPrompt) {
      if (!example.prompt || example.prompt->empty()) {
        throw DataError("example lacks a prompt: " + example.id);
      }
      pair.source = *example.prompt;
    } else {
      if (example.keywords.empty()) {
        throw DataError("example lacks keywords: " + example.id);
      }
      pair.source = JoinKeywords(example.keywords);
    }
    pairs.push_back(std::move(pair));
  }
  return pairs;
}

}  // namespace

std::string TaskSettingName(TaskSetting task) {
  return task == TaskSetting::kPrompt ? "tt-prompt" : "tt-keyword";
}

TaskSetting TaskSettingFromName(const std::string& name) {
  if (name == "tt-prompt") return TaskSetting::kPrompt;
  if (name == "tt-keyword") return TaskSetting::kKeyword;
  throw ConfigError("unknown task (expected tt-prompt or tt-keyword): " +
                    name);
}

std::vector<TaskPair> BuildTaskPairs(const Corpus& corpus, TaskSetting task) {
  return BuildPairs(corpus, task, /*filter=*/false, Split::kUnassigned);
}

std::vector<TaskPair> BuildTaskPairs(const Corpus& corpus, TaskSetting task,
                                     Split split) {
  return BuildPairs(corpus, task, /*filter=*/true, split);
}

std::string JoinKeywords(const std::vector<std::string>& keywords) {
  if (keywords.empty()) throw DataError("empty keyword list");
  std::string joined;
  for (std::size_t i = 0; i < keywords.size(); ++i) {
    if (i > 0) joined += ", ";
    joined += keywords[i];
  }
  return joined;
}

}  // namespace twistgen
