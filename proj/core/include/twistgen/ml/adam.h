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

#ifndef TWISTGEN_ML_ADAM_H_
#define TWISTGEN_ML_ADAM_H_

#include <cstddef>
#include <vector>

#include <Eigen/Core>

namespace twistgen {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  // Decoupled decay: applied to the weights directly, not through the
  // gradient moments.
  double weight_decay = 0.0;
};

// AdamW with per-parameter-matrix state. Each trainable matrix registers a
// slot once; every step the caller advances the shared timestep and then
// updates each slot with its gradient.
class AdamW {
 public:
  explicit AdamW(const AdamConfig& config) : config_(config) {}

  // Allocates first/second moment buffers for a rows x cols matrix and
  // returns the slot id to pass to Update().
  std::size_t Register(Eigen::Index rows, Eigen::Index cols);

  // Advances the bias-correction timestep. Call once per optimization step,
  // before the Update() calls of that step.
  void BeginStep() { ++t_; }

  // In-place AdamW update of `w`. `lr_scale` multiplies the base learning
  // rate (used for warmup/decay schedules).
  void Update(std::size_t slot, Eigen::MatrixXd& w, const Eigen::MatrixXd& grad,
              double lr_scale = 1.0);

  const AdamConfig& config() const { return config_; }
  long t() const { return t_; }

 private:
  AdamConfig config_;
  long t_ = 0;
  std::vector<Eigen::MatrixXd> m_;
  std::vector<Eigen::MatrixXd> v_;
};

}  // namespace twistgen

#endif  // TWISTGEN_ML_ADAM_H_
