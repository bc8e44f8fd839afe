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

#ifndef TWISTGEN_COMMON_RNG_H_
#define TWISTGEN_COMMON_RNG_H_

#include <cstdint>
#include <random>
#include <string>
#include <string_view>

namespace twistgen {

// 64-bit FNV-1a over a byte string. Stable across platforms, used wherever a
// deterministic content hash is needed (splits, feature hashing, caching).
uint64_t Fnv1a64(std::string_view data);

// splitmix64 mixer; good for deriving independent streams from one seed.
uint64_t SplitMix64(uint64_t x);

// Deterministic engine seeded from a base seed and a stream label, so that
// independent pipeline stages never share a random stream.
std::mt19937_64 MakeEngine(uint64_t seed, std::string_view stream);

}  // namespace twistgen

#endif  // TWISTGEN_COMMON_RNG_H_
