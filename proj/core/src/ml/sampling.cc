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

#include "twistgen/ml/sampling.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "twistgen/common/error.h"

namespace twistgen {

double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

Eigen::VectorXd SoftmaxWithTemperature(const Eigen::VectorXd& logits,
                                       double temperature) {
  if (logits.size() == 0) throw BackendError("softmax over empty logits");
  if (temperature < 0) throw ConfigError("temperature must be >= 0");
  Eigen::VectorXd probs = Eigen::VectorXd::Zero(logits.size());
  if (temperature == 0.0) {
    Eigen::Index best = 0;
    for (Eigen::Index i = 1; i < logits.size(); ++i) {
      if (logits[i] > logits[best]) best = i;
    }
    probs[best] = 1.0;
    return probs;
  }
  const Eigen::ArrayXd scaled = logits.array() / temperature;
  const double max = scaled.maxCoeff();
  const Eigen::ArrayXd exps = (scaled - max).exp();
  probs = (exps / exps.sum()).matrix();
  return probs;
}

int SampleNucleus(const Eigen::VectorXd& logits, double top_p,
                  double temperature, std::mt19937_64& rng) {
  if (top_p <= 0.0 || top_p > 1.0) {
    throw ConfigError("top_p must be in (0, 1]");
  }
  const Eigen::VectorXd probs = SoftmaxWithTemperature(logits, temperature);
  if (temperature == 0.0) {
    Eigen::Index best = 0;
    probs.maxCoeff(&best);
    return static_cast<int>(best);
  }
  std::vector<int> order(static_cast<std::size_t>(probs.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&probs](int a, int b) {
    if (probs[a] != probs[b]) return probs[a] > probs[b];
    return a < b;
  });
  // Smallest prefix whose mass reaches top_p; the boundary token is included.
  double mass = 0.0;
  std::size_t keep = order.size();
  for (std::size_t i = 0; i < order.size(); ++i) {
    mass += probs[order[i]];
    if (mass >= top_p) {
      keep = i + 1;
      break;
    }
  }
  const double u = UniformUnit(rng) * mass;
  double running = 0.0;
  for (std::size_t i = 0; i < keep; ++i) {
    running += probs[order[i]];
    if (u < running) return order[i];
  }
  return order[keep - 1];
}

}  // namespace twistgen
