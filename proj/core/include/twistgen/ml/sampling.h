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

#ifndef TWISTGEN_ML_SAMPLING_H_
#define TWISTGEN_ML_SAMPLING_H_

#include <random>

#include <Eigen/Core>

namespace twistgen {

// Uniform double in [0, 1) built from the top 53 bits of one engine draw.
// Kept in-house so sampled outputs are identical across standard libraries.
double UniformUnit(std::mt19937_64& rng);

// Softmax over logits / temperature. temperature == 0 collapses to a
// one-hot on the argmax (lowest index wins ties).
Eigen::VectorXd SoftmaxWithTemperature(const Eigen::VectorXd& logits,
                                       double temperature);

// Nucleus (top-p) sampling: keep the smallest probability-sorted prefix with
// cumulative mass >= top_p (ties broken by lower index first), renormalize,
// and draw from it. top_p == 1 reduces to plain sampling; temperature == 0
// is greedy regardless of top_p.
int SampleNucleus(const Eigen::VectorXd& logits, double top_p,
                  double temperature, std::mt19937_64& rng);

}  // namespace twistgen

#endif  // TWISTGEN_ML_SAMPLING_H_
