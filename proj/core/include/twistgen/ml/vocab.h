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

#ifndef TWISTGEN_ML_VOCAB_H_
#define TWISTGEN_ML_VOCAB_H_

#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

namespace twistgen {

// Token table with stable dense ids. Ids 0-2 are the specials below; lookup
// of an unknown token yields the <unk> id.
class Vocab {
 public:
  static constexpr const char* kUnk = "<unk>";
  static constexpr const char* kBos = "<bos>";
  static constexpr const char* kEos = "<eos>";

  Vocab();

  // Idempotent; returns the token's id.
  int Add(const std::string& token);
  // Adds every token in order; used to graft phoneme symbols onto a
  // grapheme vocabulary so one model can serve both spaces.
  void Extend(const std::vector<std::string>& tokens);

  int Id(const std::string& token) const;
  const std::string& Token(int id) const;
  bool Contains(const std::string& token) const;
  int size() const { return static_cast<int>(tokens_.size()); }

  int unk_id() const { return 0; }
  int bos_id() const { return 1; }
  int eos_id() const { return 2; }

  // Keeps tokens seen at least min_count times, in first-seen order.
  static Vocab Build(const std::vector<std::vector<std::string>>& sequences,
                     std::size_t min_count = 1);

  std::vector<int> Encode(const std::vector<std::string>& tokens) const;
  std::vector<std::string> Decode(const std::vector<int>& ids) const;

  void Save(const std::filesystem::path& path) const;
  static Vocab Load(const std::filesystem::path& path);

 private:
  std::vector<std::string> tokens_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace twistgen

#endif  // TWISTGEN_ML_VOCAB_H_
