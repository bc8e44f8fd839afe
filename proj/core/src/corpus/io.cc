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

#include "twistgen/corpus/io.h"

#include <nlohmann/json.hpp>
#include <unordered_set>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/strings.h"

namespace twistgen {

using nlohmann::json;

std::string SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kVal: return "val";
    case Split::kTest: return "test";
    case Split::kUnassigned: return "unassigned";
  }
  return "unassigned";
}

Split SplitFromName(const std::string& name) {
  if (name == "train") return Split::kTrain;
  if (name == "val") return Split::kVal;
  if (name == "test") return Split::kTest;
  if (name == "unassigned") return Split::kUnassigned;
  throw DataError("unknown split label: " + name);
}

void Corpus::Validate() const {
  std::unordered_set<std::string> ids;
  std::unordered_set<std::string> norm_texts;
  for (const auto& ex : examples) {
    if (ex.id.empty()) throw DataError("example with empty id");
    if (!ids.insert(ex.id).second) throw DataError("duplicate id: " + ex.id);
    if (SplitWhitespace(ex.text).empty()) {
      throw DataError("example has empty text: " + ex.id);
    }
    std::string norm =
        JoinWith(SplitWhitespace(Lowercase(ex.text)), " ");
    if (!norm_texts.insert(norm).second) {
      throw DataError("duplicate normalized text at id: " + ex.id);
    }
  }
}

void SplitRatios::Validate() const {
  for (double r : {train, val, test}) {
    if (!(r > 0.0 && r < 1.0)) {
      throw ConfigError("split ratios must lie in (0,1)");
    }
  }
  if (std::abs(train + val + test - 1.0) > 1e-9) {
    throw ConfigError("split ratios must sum to 1");
  }
}

Corpus LoadCorpus(const std::filesystem::path& path) {
  Corpus corpus;
  auto lines = ReadLines(path);
  size_t lineno = 0;
  for (const auto& line : lines) {
    ++lineno;
    if (Trim(line).empty()) continue;
    json rec;
    try {
      rec = json::parse(line);
    } catch (const json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": malformed record: " + e.what());
    }
    if (!rec.contains("id") || !rec.contains("text")) {
      throw DataError(path.string() + ":" + std::to_string(lineno) +
                      ": record missing id or text");
    }
    TwisterExample ex;
    ex.id = rec.at("id").get<std::string>();
    ex.text = rec.at("text").get<std::string>();
    if (rec.contains("non_tt_text") && !rec["non_tt_text"].is_null()) {
      ex.non_tt_text = rec["non_tt_text"].get<std::string>();
    }
    if (rec.contains("phonemes") && !rec["phonemes"].is_null()) {
      ex.phonemes = rec["phonemes"].get<std::string>();
    }
    if (rec.contains("prompt") && !rec["prompt"].is_null()) {
      ex.prompt = rec["prompt"].get<std::string>();
    }
    if (rec.contains("keywords") && !rec["keywords"].is_null()) {
      ex.keywords = rec["keywords"].get<std::vector<std::string>>();
    }
    if (rec.contains("split") && !rec["split"].is_null()) {
      ex.split = SplitFromName(rec["split"].get<std::string>());
    }
    if (rec.contains("source") && !rec["source"].is_null()) {
      ex.source = rec["source"].get<std::string>();
    }
    corpus.examples.push_back(std::move(ex));
  }
  if (corpus.examples.empty()) {
    throw DataError(path.string() + ": no records");
  }
  corpus.Validate();
  return corpus;
}

void SaveCorpus(const Corpus& corpus, const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(corpus.examples.size());
  for (const auto& ex : corpus.examples) {
    json rec;
    rec["id"] = ex.id;
    rec["text"] = ex.text;
    if (ex.non_tt_text) rec["non_tt_text"] = *ex.non_tt_text;
    if (ex.phonemes) rec["phonemes"] = *ex.phonemes;
    if (ex.prompt) rec["prompt"] = *ex.prompt;
    if (!ex.keywords.empty()) rec["keywords"] = ex.keywords;
    if (ex.split != Split::kUnassigned) rec["split"] = SplitName(ex.split);
    if (!ex.source.empty()) rec["source"] = ex.source;
    lines.push_back(rec.dump());
  }
  WriteLines(path, lines);
}

std::vector<std::string> LoadBlocklist(const std::filesystem::path& path) {
  std::vector<std::string> terms;
  for (const auto& line : ReadDataLines(path)) {
    terms.push_back(Lowercase(Trim(line)));
  }
  return terms;
}

void WriteRemovalLog(const std::vector<RemovalEntry>& entries,
                     const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(entries.size());
  for (const auto& e : entries) {
    lines.push_back(e.id + "\t" + e.reason);
  }
  WriteLines(path, lines);
}

}  // namespace twistgen
