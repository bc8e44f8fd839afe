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

#include "twistgen/evaluation/report.h"

#include <algorithm>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "twistgen/common/error.h"
#include "twistgen/common/io.h"

namespace twistgen {

namespace {

void CheckBackends(const EvaluationBackends& backends, bool need_relevance) {
  if (backends.classifier == nullptr || backends.g2p == nullptr ||
      backends.fluency_lm == nullptr || backends.tokenizer == nullptr) {
    throw ConfigError("evaluation backends are incomplete");
  }
  if (need_relevance && backends.relevance == nullptr) {
    throw ConfigError("keyword-task evaluation requires a relevance scorer");
  }
}

void AppendError(MetricRow& row, const std::string& what,
                 const std::string& detail) {
  if (!row.error.empty()) row.error += "; ";
  row.error += what + ": " + detail;
}

// Scores one text into the row; null metrics carry their reason.
void ScoreRow(MetricRow& row, const std::string& text,
              const std::optional<std::string>& stored_phonemes,
              const std::vector<std::string>* keywords,
              const EvaluationBackends& backends, bool has_relevance) {
  try {
    if (stored_phonemes) {
      row.difficulty = backends.classifier->Score(*stored_phonemes);
    } else {
      row.difficulty = backends.classifier->ScoreText(text, *backends.g2p);
    }
  } catch (const Error& e) {
    AppendError(row, "difficulty", e.what());
  }
  try {
    row.fluency = Fluency(*backends.fluency_lm, *backends.tokenizer, text);
  } catch (const Error& e) {
    AppendError(row, "fluency", e.what());
  }
  if (has_relevance) {
    if (keywords == nullptr || keywords->empty()) {
      AppendError(row, "relevance", "no keywords for this example");
    } else {
      try {
        row.relevance = backends.relevance->Score(*keywords, text);
      } catch (const Error& e) {
        AppendError(row, "relevance", e.what());
      }
    }
  }
}

nlohmann::ordered_json RowToJson(const MetricRow& row, bool has_relevance) {
  nlohmann::ordered_json j;
  j["id"] = row.id;
  j["difficulty"] =
      row.difficulty ? nlohmann::json(*row.difficulty) : nlohmann::json();
  j["fluency"] =
      row.fluency ? nlohmann::json(*row.fluency) : nlohmann::json();
  if (has_relevance) {
    j["relevance"] =
        row.relevance ? nlohmann::json(*row.relevance) : nlohmann::json();
  }
  j["error"] = row.error;
  return j;
}

}  // namespace

MetricAggregate AggregateRows(const std::vector<MetricRow>& rows,
                              bool has_relevance) {
  MetricAggregate agg;
  agg.rows = static_cast<int>(rows.size());
  double difficulty_sum = 0.0, fluency_sum = 0.0, relevance_sum = 0.0;
  for (const MetricRow& row : rows) {
    bool complete = true;
    if (row.difficulty) {
      difficulty_sum += *row.difficulty;
      ++agg.difficulty_n;
    } else {
      complete = false;
    }
    if (row.fluency) {
      fluency_sum += *row.fluency;
      ++agg.fluency_n;
    } else {
      complete = false;
    }
    if (has_relevance) {
      if (row.relevance) {
        relevance_sum += *row.relevance;
        ++agg.relevance_n;
      } else {
        complete = false;
      }
    }
    if (!complete) ++agg.excluded;
  }
  if (agg.difficulty_n > 0) agg.difficulty_mean = difficulty_sum / agg.difficulty_n;
  if (agg.fluency_n > 0) agg.fluency_mean = fluency_sum / agg.fluency_n;
  if (agg.relevance_n > 0) agg.relevance_mean = relevance_sum / agg.relevance_n;
  return agg;
}

EvaluationReport EvaluateGenerations(
    const std::vector<GenerationRecord>& records, const std::string& method,
    TaskSetting task, const EvaluationBackends& backends,
    const std::map<std::string, std::vector<std::string>>& keywords_by_id) {
  if (records.empty()) throw DataError("evaluate: no generation records");
  EvaluationReport report;
  report.method = method;
  report.task = task;
  report.has_relevance = task == TaskSetting::kKeyword;
  CheckBackends(backends, report.has_relevance);

  for (const GenerationRecord& record : records) {
    MetricRow row;
    row.id = record.id;
    if (record.failed || record.final_text.empty()) {
      row.error = record.error.empty() ? "generation failed" : record.error;
    } else {
      const std::vector<std::string>* keywords = nullptr;
      auto it = keywords_by_id.find(record.id);
      if (it != keywords_by_id.end()) keywords = &it->second;
      ScoreRow(row, record.final_text, std::nullopt, keywords, backends,
               report.has_relevance);
    }
    report.rows.push_back(std::move(row));
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const MetricRow& a, const MetricRow& b) { return a.id < b.id; });
  report.aggregate = AggregateRows(report.rows, report.has_relevance);
  return report;
}

EvaluationReport EvaluateGold(const Corpus& corpus, TaskSetting task,
                              const EvaluationBackends& backends,
                              Split split) {
  EvaluationReport report;
  report.method = "gold";
  report.task = task;
  report.has_relevance = task == TaskSetting::kKeyword;
  CheckBackends(backends, report.has_relevance);

  for (const TwisterExample& example : corpus.examples) {
    if (example.split != split) continue;
    MetricRow row;
    row.id = example.id;
    ScoreRow(row, example.text, example.phonemes, &example.keywords, backends,
             report.has_relevance);
    report.rows.push_back(std::move(row));
  }
  if (report.rows.empty()) {
    throw DataError("evaluate gold: no examples in the requested split");
  }
  std::sort(report.rows.begin(), report.rows.end(),
            [](const MetricRow& a, const MetricRow& b) { return a.id < b.id; });
  report.aggregate = AggregateRows(report.rows, report.has_relevance);
  return report;
}

void WriteReportRows(const EvaluationReport& report,
                     const std::filesystem::path& path) {
  std::vector<std::string> lines;
  lines.reserve(report.rows.size());
  for (const MetricRow& row : report.rows) {
    lines.push_back(RowToJson(row, report.has_relevance).dump());
  }
  WriteLines(path, lines);
}

std::vector<MetricRow> LoadReportRows(const std::filesystem::path& path) {
  std::vector<MetricRow> rows;
  int line_no = 0;
  for (const std::string& line : ReadDataLines(path)) {
    ++line_no;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("report rows line " + std::to_string(line_no) + ": " +
                      e.what());
    }
    MetricRow row;
    row.id = j.at("id").get<std::string>();
    if (j.contains("difficulty") && !j["difficulty"].is_null()) {
      row.difficulty = j["difficulty"].get<double>();
    }
    if (j.contains("fluency") && !j["fluency"].is_null()) {
      row.fluency = j["fluency"].get<double>();
    }
    if (j.contains("relevance") && !j["relevance"].is_null()) {
      row.relevance = j["relevance"].get<double>();
    }
    row.error = j.value("error", "");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw DataError("report rows file is empty: " + path.string());
  return rows;
}

void WriteReportSummary(const EvaluationReport& report,
                        const std::filesystem::path& path) {
  nlohmann::ordered_json j;
  j["method"] = report.method;
  j["task"] = TaskSettingName(report.task);
  j["rows"] = report.aggregate.rows;
  j["excluded"] = report.aggregate.excluded;
  j["difficulty"] = {{"mean", report.aggregate.difficulty_mean},
                     {"n", report.aggregate.difficulty_n}};
  j["fluency"] = {{"mean", report.aggregate.fluency_mean},
                  {"n", report.aggregate.fluency_n}};
  if (report.has_relevance) {
    j["relevance"] = {{"mean", report.aggregate.relevance_mean},
                      {"n", report.aggregate.relevance_n}};
  }
  WriteStringToFile(path, j.dump(2) + "\n");
}

std::string FormatComparisonTable(
    const std::vector<EvaluationReport>& reports) {
  if (reports.empty()) throw DataError("comparison table: no reports");
  bool any_relevance = false;
  for (const EvaluationReport& r : reports) {
    any_relevance = any_relevance || r.has_relevance;
  }
  std::string out = "method            difficulty     fluency";
  if (any_relevance) out += "   relevance";
  out += "    rows  excluded\n";
  char buffer[160];
  for (const EvaluationReport& r : reports) {
    std::snprintf(buffer, sizeof(buffer), "%-16s  %10.3f  %10.3f",
                  r.method.c_str(), r.aggregate.difficulty_mean,
                  r.aggregate.fluency_mean);
    out += buffer;
    if (any_relevance) {
      if (r.has_relevance) {
        std::snprintf(buffer, sizeof(buffer), "  %10.3f",
                      r.aggregate.relevance_mean);
      } else {
        std::snprintf(buffer, sizeof(buffer), "  %10s", "-");
      }
      out += buffer;
    }
    std::snprintf(buffer, sizeof(buffer), "  %6d  %8d\n", r.aggregate.rows,
                  r.aggregate.excluded);
    out += buffer;
  }
  return out;
}

}  // namespace twistgen
