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

#include "twistgen/evaluation/human_scores.h"

#include <algorithm>
#include <map>
#include <sstream>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"

namespace twistgen {

namespace {

int ParseScore(const std::string& field, const std::string& what, int line) {
  std::size_t pos = 0;
  int value = 0;
  try {
    value = std::stoi(field, &pos);
  } catch (const std::exception&) {
    pos = std::string::npos;
  }
  if (pos != field.size() || value < 1 || value > 5) {
    throw DataError("human scores line " + std::to_string(line) + ": " + what +
                    " must be an integer in 1..5, got '" + field + "'");
  }
  return value;
}

}  // namespace

std::vector<HumanScore> LoadHumanScores(const std::filesystem::path& path) {
  std::vector<std::string> lines = ReadLines(path);
  struct Sums {
    double difficulty = 0.0;
    double fluency = 0.0;
    int count = 0;
  };
  std::map<std::string, Sums> by_id;
  int line_no = 0;
  for (const std::string& line : lines) {
    ++line_no;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.size() != 4) {
      throw DataError("human scores line " + std::to_string(line_no) +
                      ": expected 4 tab-separated fields, got " +
                      std::to_string(fields.size()));
    }
    if (fields[0].empty() || fields[1].empty()) {
      throw DataError("human scores line " + std::to_string(line_no) +
                      ": empty id or annotator");
    }
    Sums& sums = by_id[fields[0]];
    sums.difficulty += ParseScore(fields[2], "difficulty", line_no);
    sums.fluency += ParseScore(fields[3], "fluency", line_no);
    ++sums.count;
  }
  if (by_id.empty()) {
    throw DataError("human scores file has no rows: " + path.string());
  }
  std::vector<HumanScore> out;
  out.reserve(by_id.size());
  for (const auto& [id, sums] : by_id) {
    HumanScore score;
    score.id = id;
    score.difficulty = sums.difficulty / sums.count;
    score.fluency = sums.fluency / sums.count;
    score.annotators = sums.count;
    out.push_back(std::move(score));
  }
  return out;  // std::map iteration is already id-sorted
}

}  // namespace twistgen
