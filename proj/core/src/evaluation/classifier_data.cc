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

#include "twistgen/evaluation/classifier_data.h"

#include <cstdio>
#include <optional>
#include <sstream>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/log.h"

namespace twistgen {

namespace {

std::optional<std::string> TryPhonemize(const G2pBackend& g2p,
                                        const std::string& text) {
  try {
    return g2p.Phonemize(text).Render();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

ClassifierDataset BuildClassifierDataset(
    const Corpus& corpus, const std::vector<std::string>& generic_negatives,
    const G2pBackend& g2p) {
  ClassifierDataset dataset;
  for (const TwisterExample& example : corpus.examples) {
    std::optional<std::string> positive =
        example.phonemes ? example.phonemes : TryPhonemize(g2p, example.text);
    std::optional<std::string> negative;
    if (example.non_tt_text) {
      negative = TryPhonemize(g2p, *example.non_tt_text);
    }
    if (!positive || (example.non_tt_text && !negative)) {
      ++dataset.dropped_pairs;
      TG_WARN() << "classifier data: dropping pair " << example.id
                << " (phonemization failed)";
      continue;
    }
    dataset.items.push_back(
        {example.id, *positive, /*label=*/1, example.split});
    if (negative) {
      dataset.items.push_back(
          {example.id + "-neg", *negative, /*label=*/0, example.split});
    }
  }
  int index = 0;
  for (const std::string& sentence : generic_negatives) {
    ++index;
    std::optional<std::string> phonemes = TryPhonemize(g2p, sentence);
    if (!phonemes) {
      ++dataset.dropped_negatives;
      TG_WARN() << "classifier data: dropping generic negative " << index
                << " (phonemization failed)";
      continue;
    }
    char id[32];
    std::snprintf(id, sizeof(id), "gen-%04d", index);
    dataset.items.push_back({id, *phonemes, /*label=*/0, Split::kTrain});
  }
  if (dataset.items.empty()) {
    throw DataError("classifier dataset is empty");
  }
  return dataset;
}

void SaveClassifierDataset(const ClassifierDataset& dataset,
                           const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(dataset.items.size());
  for (const LabeledPhonemes& item : dataset.items) {
    lines.push_back(item.id + "\t" + std::to_string(item.label) + "\t" +
                    SplitName(item.split) + "\t" + item.phonemes);
  }
  WriteLines(path, lines);
}

ClassifierDataset LoadClassifierDataset(const std::filesystem::path& path) {
  ClassifierDataset dataset;
  int line_no = 0;
  for (const std::string& line : ReadLines(path)) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.size() != 4) {
      throw DataError("classifier dataset line " + std::to_string(line_no) +
                      ": expected 4 fields");
    }
    if (fields[1] != "0" && fields[1] != "1") {
      throw DataError("classifier dataset line " + std::to_string(line_no) +
                      ": label must be 0 or 1");
    }
    LabeledPhonemes item;
    item.id = fields[0];
    item.label = fields[1] == "1" ? 1 : 0;
    item.split = SplitFromName(fields[2]);
    item.phonemes = fields[3];
    if (item.phonemes.empty()) {
      throw DataError("classifier dataset line " + std::to_string(line_no) +
                      ": empty phonemes");
    }
    dataset.items.push_back(std::move(item));
  }
  if (dataset.items.empty()) {
    throw DataError("classifier dataset file has no rows: " + path.string());
  }
  return dataset;
}

}  // namespace twistgen
