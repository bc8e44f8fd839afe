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

#include "twistgen/ml/adam.h"

#include <cmath>

#include "twistgen/common/error.h"

namespace twistgen {

std::size_t AdamW::Register(Eigen::Index rows, Eigen::Index cols) {
  m_.emplace_back(Eigen::MatrixXd::Zero(rows, cols));
  v_.emplace_back(Eigen::MatrixXd::Zero(rows, cols));
  return m_.size() - 1;
}

void AdamW::Update(std::size_t slot, Eigen::MatrixXd& w,
                   const Eigen::MatrixXd& grad, double lr_scale) {
  if (slot >= m_.size()) throw BackendError("optimizer slot out of range");
  if (t_ <= 0) throw BackendError("AdamW::Update before BeginStep");
  Eigen::MatrixXd& m = m_[slot];
  Eigen::MatrixXd& v = v_[slot];
  m = config_.beta1 * m + (1.0 - config_.beta1) * grad;
  v = config_.beta2 * v.array().matrix() +
      (1.0 - config_.beta2) * grad.array().square().matrix();
  const double bc1 = 1.0 - std::pow(config_.beta1, static_cast<double>(t_));
  const double bc2 = 1.0 - std::pow(config_.beta2, static_cast<double>(t_));
  const double lr = config_.lr * lr_scale;
  const Eigen::ArrayXXd m_hat = m.array() / bc1;
  const Eigen::ArrayXXd v_hat = v.array() / bc2;
  w.array() -= lr * (m_hat / (v_hat.sqrt() + config_.eps) +
                     config_.weight_decay * w.array());
}

}  // namespace twistgen
