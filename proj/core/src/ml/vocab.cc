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

#include "twistgen/ml/vocab.h"

#include <unordered_map>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"

namespace twistgen {

Vocab::Vocab() {
  Add(kUnk);
  Add(kBos);
  Add(kEos);
}

int Vocab::Add(const std::string& token) {
  auto it = index_.find(token);
  if (it != index_.end()) return it->second;
  const int id = static_cast<int>(tokens_.size());
  tokens_.push_back(token);
  index_[token] = id;
  return id;
}

void Vocab::Extend(const std::vector<std::string>& tokens) {
  for (const std::string& t : tokens) Add(t);
}

int Vocab::Id(const std::string& token) const {
  auto it = index_.find(token);
  return it == index_.end() ? unk_id() : it->second;
}

const std::string& Vocab::Token(int id) const {
  if (id < 0 || id >= size()) {
    throw DataError("vocab id out of range: " + std::to_string(id));
  }
  return tokens_[static_cast<std::size_t>(id)];
}

bool Vocab::Contains(const std::string& token) const {
  return index_.count(token) > 0;
}

Vocab Vocab::Build(const std::vector<std::vector<std::string>>& sequences,
                   std::size_t min_count) {
  std::unordered_map<std::string, std::size_t> counts;
  std::vector<std::string> order;
  for (const auto& seq : sequences) {
    for (const std::string& tok : seq) {
      if (++counts[tok] == 1) order.push_back(tok);
    }
  }
  Vocab vocab;
  for (const std::string& tok : order) {
    if (counts[tok] >= min_count) vocab.Add(tok);
  }
  return vocab;
}

std::vector<int> Vocab::Encode(const std::vector<std::string>& tokens) const {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const std::string& tok : tokens) ids.push_back(Id(tok));
  return ids;
}

std::vector<std::string> Vocab::Decode(const std::vector<int>& ids) const {
  std::vector<std::string> tokens;
  tokens.reserve(ids.size());
  for (int id : ids) tokens.push_back(Token(id));
  return tokens;
}

void Vocab::Save(const std::filesystem::path& path) const {
  WriteLines(path, tokens_);
}

Vocab Vocab::Load(const std::filesystem::path& path) {
  std::vector<std::string> lines = ReadLines(path);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.size() < 3 || lines[0] != kUnk || lines[1] != kBos ||
      lines[2] != kEos) {
    throw DataError("not a vocab file: " + path.string());
  }
  Vocab vocab;
  for (std::size_t i = 3; i < lines.size(); ++i) {
    if (lines[i].empty()) {
      throw DataError("vocab file has an empty token line: " + path.string());
    }
    vocab.Add(lines[i]);
  }
  return vocab;
}

}  // namespace twistgen
