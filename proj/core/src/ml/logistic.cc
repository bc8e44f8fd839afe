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

#include "twistgen/ml/logistic.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "twistgen/common/error.h"
#include "twistgen/common/rng.h"
#include "twistgen/ml/sampling.h"

namespace twistgen {
namespace {

double Sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

double ClassF1(const std::vector<int>& gold, const std::vector<int>& predicted,
               int positive) {
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == positive;
    const bool p = predicted[i] == positive;
    if (g && p) ++tp;
    if (!g && p) ++fp;
    if (g && !p) ++fn;
  }
  if (tp == 0) return 0.0;
  const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace

void LogisticConfig::Validate() const {
  if (epochs < 1) throw ConfigError("classifier epochs must be >= 1");
  if (batch_size < 1) throw ConfigError("classifier batch_size must be >= 1");
  if (lr <= 0) throw ConfigError("classifier lr must be > 0");
  if (l2 < 0) throw ConfigError("classifier l2 must be >= 0");
}

LogisticModel::LogisticModel(int dim, const LogisticConfig& config)
    : config_(config), weights_(Eigen::VectorXd::Zero(dim)) {
  config_.Validate();
  if (dim < 1) throw ConfigError("classifier feature dim must be >= 1");
}

std::vector<double> LogisticModel::Train(
    const std::vector<SparseFeatures>& features,
    const std::vector<int>& labels) {
  if (features.empty()) throw DataError("empty classifier training set");
  if (features.size() != labels.size()) {
    throw DataError("classifier features/labels length mismatch");
  }
  const bool has_pos = std::find(labels.begin(), labels.end(), 1) != labels.end();
  const bool has_neg = std::find(labels.begin(), labels.end(), 0) != labels.end();
  if (!has_pos || !has_neg) {
    throw DataError("classifier training set contains a single class");
  }
  for (const SparseFeatures& x : features) {
    for (const auto& [idx, value] : x) {
      if (idx < 0 || idx >= dim()) {
        throw DataError("classifier feature index out of range");
      }
      if (!std::isfinite(value)) {
        throw DataError("non-finite classifier feature value");
      }
    }
  }

  const std::size_t n = features.size();
  const std::size_t batch = static_cast<std::size_t>(config_.batch_size);
  std::mt19937_64 rng = MakeEngine(config_.seed, "classifier-shuffle");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::vector<double> losses;
  Eigen::VectorXd grad = Eigen::VectorXd::Zero(weights_.size());
  for (int epoch = 0; epoch < config_.epochs; ++epoch) {
    for (std::size_t i = n - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(
          UniformUnit(rng) * static_cast<double>(i + 1));
      std::swap(order[i], order[std::min(j, i)]);
    }
    double epoch_loss = 0.0;
    for (std::size_t begin = 0; begin < n; begin += batch) {
      const std::size_t count = std::min(batch, n - begin);
      grad.setZero();
      double gbias = 0.0;
      for (std::size_t b = 0; b < count; ++b) {
        const std::size_t row = order[begin + b];
        const double p = Probability(features[row]);
        const double y = labels[row];
        epoch_loss -= y > 0.5 ? std::log(std::max(p, 1e-300))
                              : std::log(std::max(1.0 - p, 1e-300));
        const double err = p - y;
        for (const auto& [idx, value] : features[row]) {
          grad[idx] += err * value;
        }
        gbias += err;
      }
      const double inv = 1.0 / static_cast<double>(count);
      weights_ -= config_.lr * (grad * inv + config_.l2 * weights_);
      bias_ -= config_.lr * gbias * inv;
    }
    epoch_loss /= static_cast<double>(n);
    if (!std::isfinite(epoch_loss)) {
      throw BackendError("non-finite classifier loss");
    }
    losses.push_back(epoch_loss);
  }
  return losses;
}

double LogisticModel::Probability(const SparseFeatures& features) const {
  double z = bias_;
  for (const auto& [idx, value] : features) z += weights_[idx] * value;
  return Sigmoid(z);
}

void LogisticModel::Save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  out << "# logistic\t" << dim() << "\n";
  out.precision(17);
  out << "bias\t" << bias_ << "\n";
  for (int i = 0; i < dim(); ++i) {
    if (weights_[i] != 0.0) out << i << "\t" << weights_[i] << "\n";
  }
  if (!out) throw DataError("failed writing " + path.string());
}

LogisticModel LogisticModel::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("missing classifier file: " + path.string());
  std::string line;
  if (!std::getline(in, line) || line.rfind("# logistic\t", 0) != 0) {
    throw DataError("bad classifier file header: " + path.string());
  }
  const int dim = std::stoi(line.substr(line.find('\t') + 1));
  LogisticModel model(dim, LogisticConfig{});
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string key;
    double value = 0.0;
    if (!(row >> key >> value)) {
      throw DataError("bad classifier row: " + line);
    }
    if (key == "bias") {
      model.bias_ = value;
    } else {
      const int idx = std::stoi(key);
      if (idx < 0 || idx >= dim) {
        throw DataError("classifier weight index out of range: " + line);
      }
      model.weights_[idx] = value;
    }
  }
  return model;
}

PrSummary PositiveClassF1(const std::vector<int>& gold,
                          const std::vector<int>& predicted) {
  if (gold.size() != predicted.size()) {
    throw DataError("gold/predicted length mismatch");
  }
  if (gold.empty()) throw DataError("empty evaluation set");
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const bool g = gold[i] == 1;
    const bool p = predicted[i] == 1;
    if (g && p) ++tp;
    if (!g && p) ++fp;
    if (g && !p) ++fn;
  }
  PrSummary s;
  if (tp + fp > 0) {
    s.precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  }
  if (tp + fn > 0) {
    s.recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  }
  if (s.precision + s.recall > 0) {
    s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
  }
  return s;
}

double MacroF1(const std::vector<int>& gold,
               const std::vector<int>& predicted) {
  if (gold.size() != predicted.size()) {
    throw DataError("gold/predicted length mismatch");
  }
  if (gold.empty()) throw DataError("empty evaluation set");
  return 0.5 * (ClassF1(gold, predicted, 1) + ClassF1(gold, predicted, 0));
}

}  // namespace twistgen
