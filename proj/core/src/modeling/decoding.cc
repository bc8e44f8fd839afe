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

#include "twistgen/modeling/decoding.h"

#include "twistgen/common/error.h"

namespace twistgen {

std::string DecodingStrategyName(DecodingStrategy s) {
  switch (s) {
    case DecodingStrategy::kNucleus: return "nucleus";
    case DecodingStrategy::kBeam: return "beam";
  }
  throw ConfigError("unknown decoding strategy");
}

DecodingStrategy DecodingStrategyFromName(const std::string& name) {
  if (name == "nucleus") return DecodingStrategy::kNucleus;
  if (name == "beam") return DecodingStrategy::kBeam;
  throw ConfigError("unknown decoding strategy: " + name);
}

void DecodingConfig::Validate() const {
  if (max_new_tokens == 0) {
    throw ConfigError("decoding: max_new_tokens must be positive");
  }
  switch (strategy) {
    case DecodingStrategy::kNucleus:
      if (top_p <= 0.0 || top_p > 1.0) {
        throw ConfigError("decoding: top_p must be in (0, 1]");
      }
      if (temperature < 0.0) {
        throw ConfigError("decoding: temperature must be non-negative");
      }
      break;
    case DecodingStrategy::kBeam:
      if (beam_width < 1) {
        throw ConfigError("decoding: beam_width must be at least 1");
      }
      break;
  }
}

}  // namespace twistgen
