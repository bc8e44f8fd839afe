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

#include "twistgen/corpus/vetting.h"

#include <set>
#include <unordered_set>

#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

std::set<std::string> TokenSet(const std::string& text) {
  std::set<std::string> out;
  for (const auto& tok : SplitWhitespace(text)) {
    std::string w = NormalizeWord(tok);
    if (!w.empty()) out.insert(w);
  }
  return out;
}

double Jaccard(const std::set<std::string>& a, const std::set<std::string>& b) {
  if (a.empty() && b.empty()) return 1.0;
  size_t inter = 0;
  for (const auto& w : a) {
    if (b.count(w)) ++inter;
  }
  size_t uni = a.size() + b.size() - inter;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

}  // namespace

VetResult VetCorpus(const Corpus& raw, const VetOptions& options) {
  std::unordered_set<std::string> blocked(options.blocklist.begin(),
                                          options.blocklist.end());
  VetResult result;
  std::vector<std::set<std::string>> kept_sets;
  for (const auto& ex : raw.examples) {
    auto tokens = TokenSet(ex.text);
    bool has_blocked = false;
    for (const auto& w : tokens) {
      if (blocked.count(w)) {
        has_blocked = true;
        break;
      }
    }
    if (has_blocked) {
      result.removed.push_back({ex.id, "blocklist"});
      continue;
    }
    if (static_cast<int>(SplitWhitespace(ex.text).size()) <
        options.min_tokens) {
      result.removed.push_back({ex.id, "too_short"});
      continue;
    }
    bool dup = false;
    for (const auto& prev : kept_sets) {
      if (Jaccard(tokens, prev) >= options.near_dup_threshold) {
        dup = true;
        break;
      }
    }
    if (dup) {
      result.removed.push_back({ex.id, "near_duplicate"});
      continue;
    }
    kept_sets.push_back(std::move(tokens));
    result.kept.examples.push_back(ex);
  }
  return result;
}

}  // namespace twistgen
