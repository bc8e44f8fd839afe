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

#ifndef TWISTGEN_EVALUATION_REPORT_H_
#define TWISTGEN_EVALUATION_REPORT_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistgen/corpus/types.h"
#include "twistgen/evaluation/difficulty.h"
#include "twistgen/evaluation/fluency.h"
#include "twistgen/evaluation/relevance.h"
#include "twistgen/modeling/run.h"
#include "twistgen/modeling/tasks.h"

namespace twistgen {

// One scored generation; a missing value means the metric failed (the error
// column says why) and the row is excluded from that metric's mean.
struct MetricRow {
  std::string id;
  std::optional<double> difficulty;
  std::optional<double> fluency;
  std::optional<double> relevance;
  std::string error;
};

struct MetricAggregate {
  int rows = 0;
  int excluded = 0;  // rows missing at least one applicable metric
  int difficulty_n = 0;
  double difficulty_mean = 0.0;
  int fluency_n = 0;
  double fluency_mean = 0.0;
  int relevance_n = 0;
  double relevance_mean = 0.0;
};

struct EvaluationReport {
  std::string method;
  TaskSetting task = TaskSetting::kPrompt;
  bool has_relevance = false;  // keyword-conditioned reports only
  std::vector<MetricRow> rows;
  MetricAggregate aggregate;
};

// Frozen scoring backends shared by every report of a comparison.
struct EvaluationBackends {
  const DifficultyClassifier* classifier = nullptr;
  const G2pBackend* g2p = nullptr;
  const NeuralLm* fluency_lm = nullptr;
  const MixedTokenizer* tokenizer = nullptr;
  const RelevanceScorer* relevance = nullptr;  // required for keyword task
};

// Arithmetic means over the present values; the single aggregation routine
// used at build time and for re-verification.
MetricAggregate AggregateRows(const std::vector<MetricRow>& rows,
                              bool has_relevance);

// Scores one method's generations. Keywords are looked up by example id for
// keyword-conditioned runs. Throws DataError on an empty record list.
EvaluationReport EvaluateGenerations(
    const std::vector<GenerationRecord>& records, const std::string& method,
    TaskSetting task, const EvaluationBackends& backends,
    const std::map<std::string, std::vector<std::string>>& keywords_by_id);

// Scores the corpus reference texts of one split as the "gold" method row.
EvaluationReport EvaluateGold(const Corpus& corpus, TaskSetting task,
                              const EvaluationBackends& backends,
                              Split split = Split::kTest);

// Line-delimited rows plus a small aggregate summary; fixed column names.
void WriteReportRows(const EvaluationReport& report,
                     const std::filesystem::path& path);
std::vector<MetricRow> LoadReportRows(const std::filesystem::path& path);
void WriteReportSummary(const EvaluationReport& report,
                        const std::filesystem::path& path);

// Fixed-width comparison table: one row per report, metrics as columns.
std::string FormatComparisonTable(
    const std::vector<EvaluationReport>& reports);

}  // namespace twistgen

#endif  // TWISTGEN_EVALUATION_REPORT_H_
