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

#include "twistgen/phonemics/p2g_dataset.h"

#include <nlohmann/json.hpp>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/log.h"

namespace twistgen {

P2gDataset BuildP2gDataset(const std::vector<std::string>& sentences,
                           const G2pBackend& g2p) {
  if (sentences.empty()) throw DataError("p2g dataset: no sentences");
  P2gDataset dataset;
  dataset.pairs.reserve(sentences.size());
  for (const std::string& sentence : sentences) {
    try {
      TransductionPair pair;
      pair.phonemes = g2p.Phonemize(sentence);
      pair.text = sentence;
      dataset.pairs.push_back(std::move(pair));
    } catch (const Error& e) {
      ++dataset.skipped;
      TG_DEBUG() << "p2g dataset: skipping sentence: " << e.what();
    }
  }
  return dataset;
}

void SaveP2gDataset(const P2gDataset& dataset,
                    const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(dataset.pairs.size());
  for (const TransductionPair& pair : dataset.pairs) {
    nlohmann::json record;
    record["phonemes"] = pair.phonemes.Render();
    record["text"] = pair.text;
    lines.push_back(record.dump());
  }
  WriteLines(path, lines);
}

P2gDataset LoadP2gDataset(const std::filesystem::path& path,
                          const PhonemeInventory& inventory) {
  P2gDataset dataset;
  std::size_t line_no = 0;
  for (const std::string& line : ReadLines(path)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json record;
    try {
      record = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) + ": " +
                      e.what());
    }
    if (!record.contains("phonemes") || !record.contains("text")) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": record needs 'phonemes' and 'text'");
    }
    TransductionPair pair;
    pair.phonemes = PhonemeSequence::Parse(
        record["phonemes"].get<std::string>(), inventory);
    pair.text = record["text"].get<std::string>();
    dataset.pairs.push_back(std::move(pair));
  }
  if (dataset.pairs.empty()) {
    throw DataError("p2g dataset file has no records: " + path.string());
  }
  return dataset;
}

}  // namespace twistgen
