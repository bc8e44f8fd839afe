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

#ifndef TWISTGEN_ML_LOGISTIC_H_
#define TWISTGEN_ML_LOGISTIC_H_

#include <cstdint>
#include <filesystem>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace twistgen {

// Sparse feature vector: (index, value) pairs with strictly increasing
// indices inside [0, dim).
using SparseFeatures = std::vector<std::pair<int, double>>;

struct LogisticConfig {
  int epochs = 50;
  int batch_size = 32;
  double lr = 0.5;
  double l2 = 1e-4;  // applied to weights, not the bias
  std::uint64_t seed = 13;

  void Validate() const;  // throws ConfigError
};

// Binary logistic regression over sparse features, trained with seeded
// mini-batch gradient descent. Deterministic for a fixed config.
class LogisticModel {
 public:
  LogisticModel(int dim, const LogisticConfig& config);

  // Labels are 0/1. Returns the mean training loss per epoch. Throws
  // DataError on empty or single-class data, BackendError on non-finite
  // loss.
  std::vector<double> Train(const std::vector<SparseFeatures>& features,
                            const std::vector<int>& labels);

  // Positive-class probability.
  double Probability(const SparseFeatures& features) const;

  void Save(const std::filesystem::path& path) const;
  static LogisticModel Load(const std::filesystem::path& path);

  int dim() const { return static_cast<int>(weights_.size()); }

 private:
  LogisticConfig config_;
  Eigen::VectorXd weights_;
  double bias_ = 0.0;
};

// Precision / recall / F1 of the positive class at the 0.5 threshold.
struct PrSummary {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

PrSummary PositiveClassF1(const std::vector<int>& gold,
                          const std::vector<int>& predicted);

// Unweighted mean of the F1 of both classes.
double MacroF1(const std::vector<int>& gold,
               const std::vector<int>& predicted);

}  // namespace twistgen

#endif  // TWISTGEN_ML_LOGISTIC_H_
