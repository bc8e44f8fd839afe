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

#ifndef TWISTGEN_MODELING_DECODING_H_
#define TWISTGEN_MODELING_DECODING_H_

#include <cstddef>
#include <string>

namespace twistgen {

enum class DecodingStrategy { kNucleus, kBeam };

std::string DecodingStrategyName(DecodingStrategy s);
DecodingStrategy DecodingStrategyFromName(const std::string& name);

struct DecodingConfig {
  DecodingStrategy strategy = DecodingStrategy::kNucleus;
  double top_p = 1.0;          // nucleus mass; (0, 1]
  double temperature = 0.8;    // softmax temperature; > 0, → 0 means greedy
  std::size_t beam_width = 5;  // beam strategy only; ≥ 1
  std::size_t max_new_tokens = 64;

  // Throws ConfigError when a field is out of range for the strategy.
  void Validate() const;
};

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_DECODING_H_
