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

#include "twistgen/modeling/run.h"

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "twistgen/common/error.h"

namespace twistgen {
namespace {

constexpr const char* kLockName = "LOCK";

std::string TimestampNow() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  std::ostringstream out;
  out << std::put_time(&tm_utc, "%Y%m%d-%H%M%S");
  return out.str();
}

}  // namespace

MethodRun CreateMethodRun(const std::filesystem::path& root,
                          const std::string& method, TaskSetting task,
                          std::uint64_t seed,
                          const nlohmann::ordered_json& config) {
  const std::filesystem::path base = root / method / TaskSettingName(task);
  std::filesystem::create_directories(base);
  const std::string stamp = TimestampNow();
  std::filesystem::path dir = base / stamp;
  for (int suffix = 1; !std::filesystem::create_directory(dir); ++suffix) {
    if (suffix > 10000) throw BackendError("cannot allocate run directory");
    dir = base / (stamp + "-" + std::to_string(suffix));
  }

  MethodRun run;
  run.method = method;
  run.task = task;
  run.seed = seed;
  run.dir = dir;
  run.config = config;
  run.config["method"] = method;
  run.config["task"] = TaskSettingName(task);
  run.config["seed"] = seed;

  AcquireRunLock(dir);
  std::ofstream out(dir / "config.json");
  out << run.config.dump(2) << "\n";
  if (!out) throw DataError("cannot write " + (dir / "config.json").string());
  return run;
}

void AcquireRunLock(const std::filesystem::path& dir) {
  const std::filesystem::path lock = dir / kLockName;
  const int fd = ::open(lock.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
  if (fd < 0) {
    throw BackendError("run directory is locked: " + dir.string());
  }
  const std::string note = std::to_string(::getpid()) + "\n";
  if (::write(fd, note.data(), note.size()) < 0) {
    // The lock itself took effect; the pid note is informational.
  }
  ::close(fd);
}

void ReleaseRunLock(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::remove(dir / kLockName, ec);
}

void WriteGenerations(const std::vector<GenerationRecord>& records,
                      const std::filesystem::path& path) {
  if (std::filesystem::exists(path)) {
    throw BackendError("refusing to overwrite generations file: " +
                       path.string());
  }
  std::ofstream out(path);
  if (!out) throw DataError("cannot write " + path.string());
  for (const GenerationRecord& record : records) {
    nlohmann::ordered_json j;
    j["id"] = record.id;
    j["input"] = record.input;
    nlohmann::ordered_json inter = nlohmann::ordered_json::object();
    for (const auto& [name, value] : record.intermediates) inter[name] = value;
    j["intermediates"] = inter;
    j["final"] = record.final_text;
    j["failed"] = record.failed;
    j["error"] = record.error;
    out << j.dump() << "\n";
  }
  if (!out) throw DataError("failed writing " + path.string());
}

std::vector<GenerationRecord> LoadGenerations(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("missing generations file: " + path.string());
  std::vector<GenerationRecord> records;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      GenerationRecord record;
      record.id = j.at("id").get<std::string>();
      record.input = j.at("input").get<std::string>();
      for (const auto& [name, value] : j.at("intermediates").items()) {
        record.intermediates.emplace_back(name, value.get<std::string>());
      }
      record.final_text = j.at("final").get<std::string>();
      record.failed = j.at("failed").get<bool>();
      record.error = j.at("error").get<std::string>();
      records.push_back(std::move(record));
    } catch (const nlohmann::json::exception& e) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": bad generation record: " + e.what());
    }
  }
  if (records.empty()) {
    throw DataError("empty generations file: " + path.string());
  }
  return records;
}

void WriteLossCurve(const LmTrainReport& report,
                    const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["val_losses"] = report.val_losses;
  j["train_losses"] = report.train_losses;
  j["best_epoch"] = report.best_epoch;
  std::ofstream out(path);
  out << j.dump(2) << "\n";
  if (!out) throw DataError("cannot write " + path.string());
}

nlohmann::ordered_json LmConfigToJson(const LmConfig& config) {
  nlohmann::ordered_json j;
  j["context"] = config.context;
  j["embed_dim"] = config.embed_dim;
  j["hidden_dim"] = config.hidden_dim;
  j["epochs"] = config.epochs;
  j["batch_size"] = config.batch_size;
  j["lr"] = config.lr;
  j["warmup_steps"] = config.warmup_steps;
  j["weight_decay"] = config.weight_decay;
  j["val_fraction"] = config.val_fraction;
  j["max_seq_len"] = config.max_seq_len;
  j["seed"] = config.seed;
  return j;
}

LmConfig LmConfigFromJson(const nlohmann::json& j) {
  LmConfig config;
  if (j.contains("context")) config.context = j.at("context").get<int>();
  if (j.contains("embed_dim")) config.embed_dim = j.at("embed_dim").get<int>();
  if (j.contains("hidden_dim")) {
    config.hidden_dim = j.at("hidden_dim").get<int>();
  }
  if (j.contains("epochs")) config.epochs = j.at("epochs").get<int>();
  if (j.contains("batch_size")) {
    config.batch_size = j.at("batch_size").get<int>();
  }
  if (j.contains("lr")) config.lr = j.at("lr").get<double>();
  if (j.contains("warmup_steps")) {
    config.warmup_steps = j.at("warmup_steps").get<long>();
  }
  if (j.contains("weight_decay")) {
    config.weight_decay = j.at("weight_decay").get<double>();
  }
  if (j.contains("val_fraction")) {
    config.val_fraction = j.at("val_fraction").get<double>();
  }
  if (j.contains("max_seq_len")) {
    config.max_seq_len = j.at("max_seq_len").get<std::size_t>();
  }
  if (j.contains("seed")) config.seed = j.at("seed").get<std::uint64_t>();
  config.Validate();
  return config;
}

nlohmann::ordered_json DecodingConfigToJson(const DecodingConfig& config) {
  nlohmann::ordered_json j;
  j["strategy"] = DecodingStrategyName(config.strategy);
  j["top_p"] = config.top_p;
  j["temperature"] = config.temperature;
  j["beam_width"] = config.beam_width;
  j["max_new_tokens"] = config.max_new_tokens;
  return j;
}

DecodingConfig DecodingConfigFromJson(const nlohmann::json& j) {
  DecodingConfig config;
  if (j.contains("strategy")) {
    config.strategy =
        DecodingStrategyFromName(j.at("strategy").get<std::string>());
  }
  if (j.contains("top_p")) config.top_p = j.at("top_p").get<double>();
  if (j.contains("temperature")) {
    config.temperature = j.at("temperature").get<double>();
  }
  if (j.contains("beam_width")) {
    config.beam_width = j.at("beam_width").get<std::size_t>();
  }
  if (j.contains("max_new_tokens")) {
    config.max_new_tokens = j.at("max_new_tokens").get<std::size_t>();
  }
  config.Validate();
  return config;
}

void SortRecordsById(std::vector<GenerationRecord>& records) {
  std::stable_sort(records.begin(), records.end(),
                   [](const GenerationRecord& a, const GenerationRecord& b) {
                     return a.id < b.id;
                   });
}

}  // namespace twistgen
