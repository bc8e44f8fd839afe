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

#include "twistgen/ml/schedule.h"

#include <algorithm>
#include <cmath>

#include "twistgen/common/error.h"

namespace twistgen {
namespace {

constexpr double kPi = 3.14159265358979323846;

void CheckArgs(long step, long warmup_steps, long total_steps) {
  if (step < 1) throw ConfigError("schedule step must be >= 1");
  if (warmup_steps < 0 || total_steps <= warmup_steps) {
    throw ConfigError("schedule needs 0 <= warmup_steps < total_steps");
  }
}

}  // namespace

double WarmupCosine(long step, long warmup_steps, long total_steps) {
  CheckArgs(step, warmup_steps, total_steps);
  if (step <= warmup_steps) {
    return static_cast<double>(step) / static_cast<double>(warmup_steps);
  }
  const double progress =
      static_cast<double>(step - warmup_steps) /
      static_cast<double>(total_steps - warmup_steps);
  return 0.5 * (1.0 + std::cos(kPi * std::min(progress, 1.0)));
}

double WarmupLinear(long step, long warmup_steps, long total_steps) {
  CheckArgs(step, warmup_steps, total_steps);
  if (step <= warmup_steps) {
    return static_cast<double>(step) / static_cast<double>(warmup_steps);
  }
  const double progress =
      static_cast<double>(step - warmup_steps) /
      static_cast<double>(total_steps - warmup_steps);
  return std::max(0.0, 1.0 - progress);
}

}  // namespace twistgen
