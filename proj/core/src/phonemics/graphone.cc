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

#include "twistgen/phonemics/graphone.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <unordered_set>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/strings.h"

namespace twistgen {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

std::string JoinSymbols(const std::vector<std::string>& symbols,
                        std::size_t begin, std::size_t count) {
  std::string out;
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) out += ' ';
    out += symbols[begin + k];
  }
  return out;
}

std::string ChunkKey(const std::string& letters,
                     const std::string& symbols_joined) {
  return letters + "\t" + symbols_joined;
}

}  // namespace

GraphoneModel::GraphoneModel(Config config) : config_(config) {
  if (config_.max_letters == 0 || config_.max_symbols == 0) {
    throw ConfigError("graphone chunks need max_letters, max_symbols >= 1");
  }
}

double GraphoneModel::Floor() const {
  const double denom = static_cast<double>(
      std::max<std::size_t>(uniform_types_ + theta_.size(), 1));
  return config_.smoothing / denom;
}

double GraphoneModel::ChunkProb(const std::string& key) const {
  if (theta_.empty()) {
    if (uniform_types_ == 0) {
      throw BackendError("graphone model evaluated before PrepareUniform");
    }
    return 1.0 / static_cast<double>(uniform_types_);
  }
  auto it = theta_.find(key);
  return it == theta_.end() ? Floor() : it->second;
}

void GraphoneModel::PrepareUniform(const std::vector<WordPair>& pairs) {
  std::unordered_set<std::string> types;
  for (const WordPair& pair : pairs) {
    const std::size_t l = pair.letters.size();
    const std::size_t s = pair.symbols.size();
    for (std::size_t i = 0; i <= l; ++i) {
      for (std::size_t j = 0; j <= s; ++j) {
        for (std::size_t dg = 0; dg <= config_.max_letters && i + dg <= l;
             ++dg) {
          for (std::size_t dp = 0; dp <= config_.max_symbols && j + dp <= s;
               ++dp) {
            if (dg == 0 && dp == 0) continue;
            types.insert(ChunkKey(pair.letters.substr(i, dg),
                                  JoinSymbols(pair.symbols, j, dp)));
          }
        }
      }
    }
  }
  uniform_types_ = std::max<std::size_t>(types.size(), 1);
}

double GraphoneModel::PairLogProb(const WordPair& pair) const {
  const std::size_t l = pair.letters.size();
  const std::size_t s = pair.symbols.size();
  if (l == 0 && s == 0) return kNegInf;
  std::vector<std::vector<double>> f(l + 1, std::vector<double>(s + 1, 0.0));
  f[0][0] = 1.0;
  for (std::size_t i = 0; i <= l; ++i) {
    for (std::size_t j = 0; j <= s; ++j) {
      if (f[i][j] == 0.0) continue;
      for (std::size_t dg = 0; dg <= config_.max_letters && i + dg <= l;
           ++dg) {
        for (std::size_t dp = 0; dp <= config_.max_symbols && j + dp <= s;
             ++dp) {
          if (dg == 0 && dp == 0) continue;
          const double p = ChunkProb(ChunkKey(
              pair.letters.substr(i, dg), JoinSymbols(pair.symbols, j, dp)));
          f[i + dg][j + dp] += f[i][j] * p;
        }
      }
    }
  }
  return f[l][s] > 0.0 ? std::log(f[l][s]) : kNegInf;
}

double GraphoneModel::MeanNll(const std::vector<WordPair>& pairs) const {
  if (pairs.empty()) throw DataError("graphone MeanNll: no pairs");
  double total = 0.0;
  for (const WordPair& pair : pairs) {
    const double lp = PairLogProb(pair);
    if (!std::isfinite(lp)) {
      throw BackendError("graphone: non-finite pair likelihood for '" +
                         pair.letters + "'");
    }
    total += -lp / static_cast<double>(pair.symbols.size() + 1);
  }
  return total / static_cast<double>(pairs.size());
}

double GraphoneModel::EmEpoch(const std::vector<WordPair>& pairs) {
  if (pairs.empty()) throw DataError("graphone EmEpoch: no pairs");
  if (theta_.empty() && uniform_types_ == 0) PrepareUniform(pairs);

  std::unordered_map<std::string, double> counts;
  double total_nll = 0.0;
  std::size_t n_ok = 0;
  for (const WordPair& pair : pairs) {
    const std::size_t l = pair.letters.size();
    const std::size_t s = pair.symbols.size();
    if (l == 0 && s == 0) continue;

    std::vector<std::vector<double>> f(l + 1, std::vector<double>(s + 1, 0.0));
    std::vector<std::vector<double>> b(l + 1, std::vector<double>(s + 1, 0.0));
    f[0][0] = 1.0;
    for (std::size_t i = 0; i <= l; ++i) {
      for (std::size_t j = 0; j <= s; ++j) {
        if (f[i][j] == 0.0) continue;
        for (std::size_t dg = 0; dg <= config_.max_letters && i + dg <= l;
             ++dg) {
          for (std::size_t dp = 0; dp <= config_.max_symbols && j + dp <= s;
               ++dp) {
            if (dg == 0 && dp == 0) continue;
            const double p = ChunkProb(ChunkKey(
                pair.letters.substr(i, dg), JoinSymbols(pair.symbols, j, dp)));
            f[i + dg][j + dp] += f[i][j] * p;
          }
        }
      }
    }
    const double z = f[l][s];
    if (z <= 0.0) continue;  // unalignable under the current chunk bounds

    b[l][s] = 1.0;
    for (std::size_t ii = l + 1; ii-- > 0;) {
      for (std::size_t jj = s + 1; jj-- > 0;) {
        if (ii == l && jj == s) continue;
        double acc = 0.0;
        for (std::size_t dg = 0; dg <= config_.max_letters && ii + dg <= l;
             ++dg) {
          for (std::size_t dp = 0; dp <= config_.max_symbols && jj + dp <= s;
               ++dp) {
            if (dg == 0 && dp == 0) continue;
            const double p = ChunkProb(ChunkKey(
                pair.letters.substr(ii, dg), JoinSymbols(pair.symbols, jj, dp)));
            acc += p * b[ii + dg][jj + dp];
          }
        }
        b[ii][jj] = acc;
      }
    }

    for (std::size_t i = 0; i <= l; ++i) {
      for (std::size_t j = 0; j <= s; ++j) {
        if (f[i][j] == 0.0) continue;
        for (std::size_t dg = 0; dg <= config_.max_letters && i + dg <= l;
             ++dg) {
          for (std::size_t dp = 0; dp <= config_.max_symbols && j + dp <= s;
               ++dp) {
            if (dg == 0 && dp == 0) continue;
            const std::string key = ChunkKey(
                pair.letters.substr(i, dg), JoinSymbols(pair.symbols, j, dp));
            const double post =
                f[i][j] * ChunkProb(key) * b[i + dg][j + dp] / z;
            if (post > 0.0) counts[key] += post;
          }
        }
      }
    }
    total_nll += -std::log(z);
    ++n_ok;
  }
  if (n_ok == 0) throw DataError("graphone EmEpoch: no alignable pairs");

  double total = 0.0;
  for (const auto& [key, c] : counts) total += c;
  theta_.clear();
  for (const auto& [key, c] : counts) theta_[key] = c / total;
  RebuildReverseIndex();
  return total_nll / static_cast<double>(n_ok);
}

void GraphoneModel::RebuildReverseIndex() {
  reverse_.clear();
  for (const auto& [key, prob] : theta_) {
    const std::size_t tab = key.find('\t');
    const std::string letters = key.substr(0, tab);
    const std::string symbols = key.substr(tab + 1);
    if (symbols.empty()) continue;  // letter-only chunks unusable in decode
    reverse_[symbols].emplace_back(letters, prob);
  }
  for (auto& [symbols, entries] : reverse_) {
    std::sort(entries.begin(), entries.end(),
              [](const auto& a, const auto& b) {
                if (a.second != b.second) return a.second > b.second;
                return a.first < b.first;
              });
  }
}

std::string GraphoneModel::Decode(
    const std::vector<std::string>& symbols) const {
  if (!trained()) throw BackendError("graphone decode before training");
  const std::size_t s = symbols.size();
  std::vector<double> score(s + 1, kNegInf);
  std::vector<std::string> letters(s + 1);
  score[0] = 0.0;
  const double floor_lp = std::log(Floor());
  for (std::size_t j = 0; j < s; ++j) {
    if (score[j] == kNegInf) continue;
    bool advanced_one = false;
    for (std::size_t dp = 1; dp <= config_.max_symbols && j + dp <= s; ++dp) {
      auto it = reverse_.find(JoinSymbols(symbols, j, dp));
      if (it == reverse_.end()) continue;
      if (dp == 1) advanced_one = true;
      for (const auto& [g, prob] : it->second) {
        const double cand = score[j] + std::log(prob);
        if (cand > score[j + dp]) {
          score[j + dp] = cand;
          letters[j + dp] = letters[j] + g;
        }
      }
    }
    if (!advanced_one) {
      // Unseen symbol (e.g. the reserved unknown): skip it at floor cost so
      // decoding always completes with letters only.
      const double cand = score[j] + floor_lp;
      if (cand > score[j + 1]) {
        score[j + 1] = cand;
        letters[j + 1] = letters[j];
      }
    }
  }
  return letters[s];
}

void GraphoneModel::Save(const std::filesystem::path& path) const {
  std::vector<std::string> lines;
  lines.reserve(theta_.size() + 1);
  lines.push_back("# uniform_types\t" + std::to_string(uniform_types_));
  std::vector<std::pair<std::string, double>> sorted(theta_.begin(),
                                                     theta_.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& [key, prob] : sorted) {
    std::ostringstream line;
    line.precision(17);
    line << key << '\t' << prob;
    lines.push_back(line.str());
  }
  WriteLines(path, lines);
}

GraphoneModel GraphoneModel::Load(const std::filesystem::path& path,
                                  Config config) {
  GraphoneModel model(config);
  for (const std::string& line : ReadLines(path)) {
    if (line.empty()) continue;
    if (line.rfind("# uniform_types\t", 0) == 0) {
      model.uniform_types_ = std::stoull(line.substr(line.rfind('\t') + 1));
      continue;
    }
    std::vector<std::string> fields = SplitOn(line, '\t');
    if (fields.size() != 3) {
      throw DataError("graphone file: expected 3 tab fields: " + line);
    }
    model.theta_[ChunkKey(fields[0], fields[1])] = std::stod(fields[2]);
  }
  if (model.theta_.empty()) {
    throw DataError("graphone file has no chunks: " + path.string());
  }
  model.RebuildReverseIndex();
  return model;
}

}  // namespace twistgen
