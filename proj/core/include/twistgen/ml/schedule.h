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

#ifndef TWISTGEN_ML_SCHEDULE_H_
#define TWISTGEN_ML_SCHEDULE_H_

namespace twistgen {

// Learning-rate multiplier for 1-based `step`: linear ramp from 0 to 1 over
// `warmup_steps`, then cosine decay to 0 at `total_steps`.
double WarmupCosine(long step, long warmup_steps, long total_steps);

// Same ramp, then linear decay to 0 at `total_steps`.
double WarmupLinear(long step, long warmup_steps, long total_steps);

}  // namespace twistgen

#endif  // TWISTGEN_ML_SCHEDULE_H_
