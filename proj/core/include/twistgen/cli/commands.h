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

#ifndef TWISTGEN_CLI_COMMANDS_H_
#define TWISTGEN_CLI_COMMANDS_H_

#include <filesystem>
#include <string>
#include <vector>

#include "twistgen/cli/config.h"

namespace twistgen {

// Writes the prepared data directory: vetted corpus with counterparts,
// prompts, keywords, phonemes and split labels, the removal log, and the
// labeled classifier dataset. Idempotent for a fixed seed.
void CmdPrepare(const RunConfig& config);

// Trains the configured method over the prepared data (pretraining stages
// are content-hash cached) and returns the new run directory containing the
// config snapshot, checkpoints, and loss curve.
std::filesystem::path CmdTrain(const RunConfig& config);

// Decodes the test split with the checkpoints of `run_dir` and writes its
// write-once generations file. Returns the generations path.
std::filesystem::path CmdGenerate(const RunConfig& config,
                                  const std::filesystem::path& run_dir);

// Scores the generations of the given run directories plus the gold
// outputs, writing per-method row/summary files and a combined comparison
// table into a fresh directory (returned).
std::filesystem::path CmdEvaluate(
    const RunConfig& config,
    const std::vector<std::filesystem::path>& run_dirs,
    const std::string& out_dir = "");

// Full argument parsing + dispatch; maps error categories to exit codes
// (0 ok, 1 config, 2 data, 3 backend).
int RunCli(int argc, const char* const* argv);

}  // namespace twistgen

#endif  // TWISTGEN_CLI_COMMANDS_H_
