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

#ifndef TWISTGEN_MODELING_RUN_H_
#define TWISTGEN_MODELING_RUN_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "twistgen/ml/neural_lm.h"
#include "twistgen/modeling/decoding.h"
#include "twistgen/modeling/tasks.h"

namespace twistgen {

// Method identifiers; also the run-directory names.
inline constexpr const char* kMethodG2g = "g2g";
inline constexpr const char* kMethodStyleTransfer = "style-transfer";
inline constexpr const char* kMethodPhonemePipeline = "phoneme-pipeline";
inline constexpr const char* kMethodJointTemplate = "joint-template";

// One trained run: every artifact it writes lives under `dir` =
// <root>/<method>/<task>/<timestamp>/ and the directory is never reused.
struct MethodRun {
  std::string method;
  TaskSetting task = TaskSetting::kPrompt;
  std::uint64_t seed = 0;
  std::filesystem::path dir;
  nlohmann::ordered_json config;  // snapshot, written once at creation
};

// One generated example. `intermediates` keeps stage outputs in pipeline
// order under stable names; single-stage methods leave it empty.
struct GenerationRecord {
  std::string id;
  std::string input;
  std::vector<std::pair<std::string, std::string>> intermediates;
  std::string final_text;
  bool failed = false;
  std::string error;
};

// Creates a fresh timestamped run directory (with a numeric suffix on
// collision), takes its lock, and writes config.json. The caller must
// ReleaseRunLock when done writing.
MethodRun CreateMethodRun(const std::filesystem::path& root,
                          const std::string& method, TaskSetting task,
                          std::uint64_t seed,
                          const nlohmann::ordered_json& config);

// Exclusive advisory lock on a run directory; throws BackendError when the
// directory is already locked.
void AcquireRunLock(const std::filesystem::path& dir);
void ReleaseRunLock(const std::filesystem::path& dir);

// Line-delimited records with fields id, input, intermediates, final,
// failed, error. Refuses to overwrite an existing file (runs are
// write-once).
void WriteGenerations(const std::vector<GenerationRecord>& records,
                      const std::filesystem::path& path);
std::vector<GenerationRecord> LoadGenerations(
    const std::filesystem::path& path);

// Loss curve of one training stage as a small JSON file.
void WriteLossCurve(const LmTrainReport& report,
                    const std::filesystem::path& path);

// Config snapshot helpers.
nlohmann::ordered_json LmConfigToJson(const LmConfig& config);
nlohmann::ordered_json DecodingConfigToJson(const DecodingConfig& config);
DecodingConfig DecodingConfigFromJson(const nlohmann::json& j);
LmConfig LmConfigFromJson(const nlohmann::json& j);

// Sorts records by example id (output order is deterministic regardless of
// generation scheduling).
void SortRecordsById(std::vector<GenerationRecord>& records);

}  // namespace twistgen

#endif  // TWISTGEN_MODELING_RUN_H_
