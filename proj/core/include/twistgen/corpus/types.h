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

#ifndef TWISTGEN_CORPUS_TYPES_H_
#define TWISTGEN_CORPUS_TYPES_H_

#include <optional>
#include <string>
#include <vector>

namespace twistgen {

enum class Split { kUnassigned, kTrain, kVal, kTest };

std::string SplitName(Split s);
Split SplitFromName(const std::string& name);

struct TwisterExample {
  std::string id;
  std::string text;
  std::optional<std::string> non_tt_text;
  std::optional<std::string> phonemes;  // rendered phoneme string
  std::optional<std::string> prompt;
  std::vector<std::string> keywords;    // empty = not extracted yet
  Split split = Split::kUnassigned;
  std::string source;                   // free-form provenance note
};

struct Corpus {
  std::vector<TwisterExample> examples;

  // Throws DataError on duplicate ids, empty texts, or duplicate
  // normalized texts.
  void Validate() const;
};

struct SplitRatios {
  double train = 0.7;
  double val = 0.15;
  double test = 0.15;

  // Throws ConfigError unless all in (0,1) and summing to 1 within 1e-9.
  void Validate() const;
};

}  // namespace twistgen

#endif  // TWISTGEN_CORPUS_TYPES_H_
