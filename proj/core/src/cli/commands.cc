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

#include "twistgen/cli/commands.h"

#include <algorithm>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "twistgen/backends/embedder.h"
#include "twistgen/backends/pos_tagger.h"
#include "twistgen/backends/synonyms.h"
#include "twistgen/cli/config.h"
#include "twistgen/common/error.h"
#include "twistgen/common/io.h"
#include "twistgen/common/log.h"
#include "twistgen/common/rng.h"
#include "twistgen/corpus/io.h"
#include "twistgen/corpus/keywords.h"
#include "twistgen/corpus/non_tt.h"
#include "twistgen/corpus/prompts.h"
#include "twistgen/corpus/sampling.h"
#include "twistgen/corpus/splitting.h"
#include "twistgen/corpus/types.h"
#include "twistgen/corpus/vetting.h"
#include "twistgen/evaluation/classifier_data.h"
#include "twistgen/evaluation/difficulty.h"
#include "twistgen/evaluation/relevance.h"
#include "twistgen/evaluation/report.h"
#include "twistgen/ml/neural_lm.h"
#include "twistgen/ml/tokenizer.h"
#include "twistgen/modeling/finetune.h"
#include "twistgen/modeling/g2g.h"
#include "twistgen/modeling/joint.h"
#include "twistgen/modeling/phoneme_pipeline.h"
#include "twistgen/modeling/run.h"
#include "twistgen/modeling/style_transfer.h"
#include "twistgen/modeling/tasks.h"
#include "twistgen/phonemics/g2p.h"
#include "twistgen/phonemics/inventory.h"
#include "twistgen/phonemics/p2g.h"
#include "twistgen/phonemics/p2g_dataset.h"
#include "twistgen/phonemics/restore.h"

namespace twistgen {
namespace {

namespace fs = std::filesystem;

// Reruns exceptions with the failing stage prepended, so a CLI user sees
// where in the pipeline things went wrong.
template <typename Fn>
auto Stage(const char* name, Fn&& fn) -> decltype(fn()) {
  try {
    return std::forward<Fn>(fn)();
  } catch (const ConfigError& e) {
    throw ConfigError(std::string(name) + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(std::string(name) + ": " + e.what());
  } catch (const BackendError& e) {
    throw BackendError(std::string(name) + ": " + e.what());
  }
}

// Every backend the commands share, constructed once per invocation.
// Members hold pointers into siblings, so the context is heap-owned and
// never copied.
struct PipelineContext {
  RunConfig config;
  PhonemeInventory inventory;
  LexiconG2p g2p;
  MixedTokenizer tokenizer;
  HashedNgramEmbedder embedder;
  KeywordExtractor keywords;
  RuleBasedRestorer restorer;
  std::vector<std::string> generic;  // full generic corpus, comment-free

  explicit PipelineContext(const RunConfig& cfg)
      : config(cfg),
        inventory(cfg.inventory_path),
        g2p(cfg.lexicon_path, &inventory),
        tokenizer(&inventory),
        embedder(),
        keywords(&embedder, LoadStopwords(cfg.stopwords_path), cfg.keywords),
        restorer(cfg.proper_nouns_path),
        generic(ReadDataLines(cfg.generic_corpus_path)) {}

  PipelineContext(const PipelineContext&) = delete;
  PipelineContext& operator=(const PipelineContext&) = delete;
};

std::unique_ptr<PipelineContext> MakeContext(const RunConfig& config) {
  CheckInputPaths(config);
  return Stage("setup", [&] { return std::make_unique<PipelineContext>(config); });
}

std::string HashHex(const std::vector<std::string>& parts) {
  std::string joined;
  for (const std::string& part : parts) {
    joined += part;
    joined.push_back('\x1f');
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(Fnv1a64(joined)));
  return buf;
}

std::string LinesFingerprint(const std::vector<std::string>& lines) {
  std::string all;
  for (const std::string& line : lines) {
    all += line;
    all.push_back('\n');
  }
  return HashHex({all});
}

std::string FileFingerprint(const fs::path& path) {
  return HashHex({ReadFileToString(path)});
}

std::vector<std::string> Truncated(const std::vector<std::string>& lines,
                                   int limit) {
  if (limit > 0 && static_cast<int>(lines.size()) > limit) {
    return std::vector<std::string>(lines.begin(), lines.begin() + limit);
  }
  return lines;
}

// Builds `<cache>/<stage>-<key>` once; later invocations with the same key
// (a content hash of every input) reuse it. A missing COMPLETE marker means
// an interrupted build, which is discarded.
fs::path EnsureCachedStage(const fs::path& cache_root, const std::string& stage,
                           const std::string& key,
                           const std::function<void(const fs::path&)>& build) {
  const fs::path dir = cache_root / (stage + "-" + key);
  if (fs::exists(dir / "COMPLETE")) {
    TG_INFO() << stage << ": reusing " << dir.string();
    return dir;
  }
  std::error_code ec;
  fs::remove_all(dir, ec);
  fs::create_directories(dir);
  TG_INFO() << stage << ": building " << dir.string();
  build(dir);
  WriteStringToFile(dir / "COMPLETE", "ok\n");
  return dir;
}

// Fine-tuning reuses the schedule fields from the config but must keep the
// backbone's architecture.
LmConfig MergeFinetune(const LmConfig& backbone, const LmConfig& finetune) {
  LmConfig merged = finetune;
  merged.context = backbone.context;
  merged.embed_dim = backbone.embed_dim;
  merged.hidden_dim = backbone.hidden_dim;
  merged.max_seq_len = std::max(backbone.max_seq_len, finetune.max_seq_len);
  return merged;
}

nlohmann::ordered_json P2gConfigJson(const P2gTrainConfig& cfg) {
  nlohmann::ordered_json j;
  j["epochs"] = cfg.epochs;
  j["val_fraction"] = cfg.val_fraction;
  j["max_candidates"] = cfg.max_candidates;
  j["lm_weight"] = cfg.lm_weight;
  j["add_k"] = cfg.add_k;
  j["max_letters"] = cfg.graphone.max_letters;
  j["max_symbols"] = cfg.graphone.max_symbols;
  j["smoothing"] = cfg.graphone.smoothing;
  return j;
}

nlohmann::ordered_json DifficultyConfigJson(const DifficultyConfig& cfg) {
  nlohmann::ordered_json j;
  j["hash_dim"] = cfg.hash_dim;
  j["max_ngram"] = cfg.max_ngram;
  j["epochs"] = cfg.logistic.epochs;
  j["batch_size"] = cfg.logistic.batch_size;
  j["lr"] = cfg.logistic.lr;
  j["l2"] = cfg.logistic.l2;
  j["seed"] = cfg.logistic.seed;
  return j;
}

fs::path EnsureGraphemeBackbone(PipelineContext& ctx) {
  const RunConfig& cfg = ctx.config;
  const std::vector<std::string> sents =
      Truncated(ctx.generic, cfg.pretrain_sentences);
  const std::string key =
      HashHex({LinesFingerprint(sents), LmConfigToJson(cfg.grapheme_lm).dump(),
               std::to_string(cfg.lm_min_count)});
  return EnsureCachedStage(cfg.cache_dir, "grapheme-lm", key,
                           [&](const fs::path& dir) {
                             PretrainedLm out = PretrainGraphemeLm(
                                 sents, ctx.tokenizer, cfg.grapheme_lm,
                                 cfg.lm_min_count);
                             out.lm.Save(dir / "model");
                             WriteLossCurve(out.report, dir / "loss_curve.json");
                           });
}

fs::path EnsurePhonemeBackbone(PipelineContext& ctx, TaskSetting task) {
  const RunConfig& cfg = ctx.config;
  const std::vector<std::string> sents =
      Truncated(ctx.generic, cfg.pretrain_sentences);
  std::vector<std::string> parts = {
      LinesFingerprint(sents), FileFingerprint(cfg.lexicon_path),
      FileFingerprint(cfg.inventory_path),
      LmConfigToJson(cfg.phoneme_lm).dump(), TaskSettingName(task)};
  const KeywordExtractor* keywords = nullptr;
  if (task == TaskSetting::kKeyword) {
    keywords = &ctx.keywords;
    parts.push_back(FileFingerprint(cfg.stopwords_path));
    parts.push_back(std::to_string(cfg.keywords.k));
    parts.push_back(cfg.keywords.use_bigrams ? "bigrams" : "unigrams");
  }
  return EnsureCachedStage(
      cfg.cache_dir, "phoneme-lm-" + TaskSettingName(task), HashHex(parts),
      [&](const fs::path& dir) {
        PretrainedLm out = PretrainPhonemeLm(sents, ctx.g2p, keywords,
                                             ctx.tokenizer, cfg.phoneme_lm,
                                             task);
        out.lm.Save(dir / "model");
        WriteLossCurve(out.report, dir / "loss_curve.json");
      });
}

// First stage of the keyword-conditioned style-transfer pipeline: the
// backbone fine-tuned to expand keyword lists into plain sentences.
fs::path EnsureKeywordToText(PipelineContext& ctx, const fs::path& backbone) {
  const RunConfig& cfg = ctx.config;
  const std::vector<std::string> sents =
      Truncated(ctx.generic, cfg.pretrain_sentences);
  const std::string key = HashHex(
      {backbone.filename().string(), LmConfigToJson(cfg.finetune).dump(),
       FileFingerprint(cfg.stopwords_path), std::to_string(cfg.keywords.k),
       cfg.keywords.use_bigrams ? "bigrams" : "unigrams"});
  return EnsureCachedStage(
      cfg.cache_dir, "keyword-to-text", key, [&](const fs::path& dir) {
        NeuralLm lm = NeuralLm::Load(backbone / "model");
        const LmConfig merged = MergeFinetune(lm.config(), cfg.finetune);
        LmTrainReport report =
            TrainKeywordToText(lm, sents, ctx.keywords, ctx.tokenizer, merged);
        lm.Save(dir / "model");
        WriteLossCurve(report, dir / "loss_curve.json");
      });
}

fs::path EnsureP2g(PipelineContext& ctx) {
  const RunConfig& cfg = ctx.config;
  const std::vector<std::string> sents =
      Truncated(ctx.generic, cfg.p2g_sentences);
  const std::string key =
      HashHex({LinesFingerprint(sents), FileFingerprint(cfg.lexicon_path),
               FileFingerprint(cfg.inventory_path), P2gConfigJson(cfg.p2g).dump()});
  return EnsureCachedStage(
      cfg.cache_dir, "p2g", key, [&](const fs::path& dir) {
        P2gDataset dataset = BuildP2gDataset(sents, ctx.g2p);
        if (dataset.skipped > 0) {
          TG_WARN() << "p2g dataset: skipped " << dataset.skipped
                    << " sentences that failed phonemization";
        }
        P2gModel model = P2gModel::Train(dataset.pairs, cfg.p2g);
        model.Save(dir / "model");
      });
}

fs::path EnsureClassifier(PipelineContext& ctx) {
  const RunConfig& cfg = ctx.config;
  const fs::path dataset_path = fs::path(cfg.data_dir) / "classifier.tsv";
  if (!fs::exists(dataset_path)) {
    throw DataError("difficulty dataset missing at " + dataset_path.string() +
                    "; run `prepare` first");
  }
  const std::string key =
      HashHex({FileFingerprint(dataset_path), FileFingerprint(cfg.inventory_path),
               DifficultyConfigJson(cfg.difficulty).dump()});
  return EnsureCachedStage(
      cfg.cache_dir, "difficulty", key, [&](const fs::path& dir) {
        ClassifierDataset dataset = LoadClassifierDataset(dataset_path);
        DifficultyClassifier classifier(&ctx.inventory, cfg.difficulty);
        classifier.Train(dataset);
        const DifficultyEvalSummary& s = classifier.eval_summary();
        TG_INFO() << "difficulty classifier: positive F1 " << s.positive.f1
                  << ", macro F1 " << s.macro_f1 << " over " << s.test_items
                  << " held-out sentences";
        classifier.Save(dir);
      });
}

Corpus LoadPreparedCorpus(const PipelineContext& ctx) {
  const fs::path path = fs::path(ctx.config.data_dir) / "corpus.jsonl";
  if (!fs::exists(path)) {
    throw DataError("prepared corpus missing at " + path.string() +
                    "; run `prepare` first");
  }
  return LoadCorpus(path);
}

NeuralLm LoadLmCheckpoint(const fs::path& dir) {
  try {
    return NeuralLm::Load(dir);
  } catch (const Error& e) {
    throw DataError("checkpoint " + dir.string() + ": " + e.what());
  }
}

nlohmann::json ParseJsonFile(const fs::path& path) {
  if (!fs::exists(path)) {
    throw DataError("missing file: " + path.string());
  }
  nlohmann::json j = nlohmann::json::parse(ReadFileToString(path),
                                           /*cb=*/nullptr,
                                           /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    throw DataError("invalid JSON in " + path.string());
  }
  return j;
}

fs::path NewEvaluationDir(const fs::path& runs_root) {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char stamp[32];
  std::strftime(stamp, sizeof(stamp), "%Y%m%d-%H%M%S", &tm);
  const fs::path root = runs_root / "evaluations";
  fs::path dir = root / stamp;
  for (int suffix = 1; fs::exists(dir); ++suffix) {
    dir = root / (std::string(stamp) + "-" + std::to_string(suffix));
  }
  fs::create_directories(dir);
  return dir;
}

}  // namespace

void CmdPrepare(const RunConfig& config) {
  std::unique_ptr<PipelineContext> ctx = MakeContext(config);

  Corpus raw = Stage("prepare/load", [&] { return LoadCorpus(config.corpus_path); });
  VetOptions vet_options;
  vet_options.near_dup_threshold = config.near_dup_threshold;
  vet_options.min_tokens = config.min_tokens;
  vet_options.blocklist =
      Stage("prepare/load", [&] { return LoadBlocklist(config.blocklist_path); });
  VetResult vetted =
      Stage("prepare/vetting", [&] { return VetCorpus(raw, vet_options); });
  Corpus corpus = std::move(vetted.kept);

  Stage("prepare/enrich", [&] {
    RuleBasedPosTagger tagger(config.pos_lexicon_path);
    SynonymLexicon synonyms(config.synonyms_path);
    for (TwisterExample& example : corpus.examples) {
      example.non_tt_text = MakeNonTwister(example.text, tagger, synonyms);
      example.prompt = ExtractPrompt(example.text,
                                     static_cast<std::size_t>(config.prompt_words));
      example.keywords = ctx->keywords.ExtractTexts(example.text);
      example.phonemes = ctx->g2p.Phonemize(example.text).Render();
    }
  });

  Stage("prepare/split", [&] {
    SplitCorpus(corpus, config.ratios, config.seed);
    corpus.Validate();
  });

  const fs::path data_dir(config.data_dir);
  fs::create_directories(data_dir);
  Stage("prepare/write", [&] {
    SaveCorpus(corpus, data_dir / "corpus.jsonl");
    WriteRemovalLog(vetted.removed, data_dir / "removals.jsonl");
  });

  ClassifierDataset dataset = Stage("prepare/difficulty-dataset", [&] {
    std::vector<std::string> negatives = SampleNegatives(
        ctx->generic, static_cast<std::size_t>(config.classifier_negatives),
        config.seed);
    return BuildClassifierDataset(corpus, negatives, ctx->g2p);
  });
  Stage("prepare/write", [&] {
    SaveClassifierDataset(dataset, data_dir / "classifier.tsv");
  });

  const SplitSizes sizes = CountSplits(corpus);
  nlohmann::ordered_json summary;
  summary["examples"] = {{"loaded", raw.examples.size()},
                         {"kept", corpus.examples.size()},
                         {"removed", vetted.removed.size()}};
  summary["splits"] = {
      {"train", sizes.train}, {"val", sizes.val}, {"test", sizes.test}};
  summary["difficulty_dataset"] = {
      {"items", dataset.items.size()},
      {"dropped_pairs", dataset.dropped_pairs},
      {"dropped_negatives", dataset.dropped_negatives}};
  WriteStringToFile(data_dir / "prepare.json", summary.dump(2) + "\n");

  TG_INFO() << "prepared " << corpus.examples.size() << " examples ("
            << sizes.train << "/" << sizes.val << "/" << sizes.test
            << " train/val/test) into " << data_dir.string();
}

std::filesystem::path CmdTrain(const RunConfig& config) {
  std::unique_ptr<PipelineContext> ctx = MakeContext(config);
  Corpus corpus = Stage("train/load", [&] { return LoadPreparedCorpus(*ctx); });
  const TaskSetting task = TaskSettingFromName(config.task);

  nlohmann::ordered_json snapshot;
  snapshot["decoding"] = DecodingConfigToJson(config.decoding);

  MethodRun run;
  if (config.method == kMethodG2g) {
    const fs::path backbone = Stage("train/grapheme-backbone",
                                    [&] { return EnsureGraphemeBackbone(*ctx); });
    NeuralLm lm = LoadLmCheckpoint(backbone / "model");
    const LmConfig merged = MergeFinetune(lm.config(), config.finetune);
    LmTrainReport report = Stage("train/finetune", [&] {
      return FinetuneG2g(lm, corpus, task, ctx->tokenizer, merged,
                         config.mask_source_loss);
    });
    snapshot["finetune"] = LmConfigToJson(merged);
    snapshot["mask_source_loss"] = config.mask_source_loss;
    snapshot["artifacts"] = {{"grapheme_backbone", backbone.string()}};
    snapshot["run_config"] = config.raw;
    run = CreateMethodRun(config.runs_root, config.method, task, config.seed,
                          snapshot);
    lm.Save(run.dir / "checkpoints" / "model");
    WriteLossCurve(report, run.dir / "loss_curve.json");
  } else if (config.method == kMethodStyleTransfer) {
    const fs::path backbone = Stage("train/grapheme-backbone",
                                    [&] { return EnsureGraphemeBackbone(*ctx); });
    NeuralLm twisterizer = LoadLmCheckpoint(backbone / "model");
    const LmConfig merged = MergeFinetune(twisterizer.config(), config.finetune);
    LmTrainReport report = Stage("train/twisterizer", [&] {
      return TrainTwisterizer(twisterizer,
                              TwisterizerPairs(corpus, Split::kTrain),
                              ctx->tokenizer, merged);
    });
    nlohmann::ordered_json artifacts;
    artifacts["grapheme_backbone"] = backbone.string();
    fs::path stage1_src = backbone;
    if (task == TaskSetting::kKeyword) {
      stage1_src = Stage("train/keyword-to-text",
                         [&] { return EnsureKeywordToText(*ctx, backbone); });
      artifacts["keyword_to_text"] = stage1_src.string();
    }
    NeuralLm stage1 = LoadLmCheckpoint(stage1_src / "model");
    snapshot["finetune"] = LmConfigToJson(merged);
    snapshot["artifacts"] = artifacts;
    snapshot["run_config"] = config.raw;
    run = CreateMethodRun(config.runs_root, config.method, task, config.seed,
                          snapshot);
    stage1.Save(run.dir / "checkpoints" / "stage1");
    twisterizer.Save(run.dir / "checkpoints" / "twisterizer");
    WriteLossCurve(report, run.dir / "loss_curve.json");
  } else if (config.method == kMethodPhonemePipeline) {
    const fs::path backbone =
        Stage("train/phoneme-backbone",
              [&] { return EnsurePhonemeBackbone(*ctx, task); });
    const fs::path p2g_dir = Stage("train/p2g", [&] { return EnsureP2g(*ctx); });
    NeuralLm lm = LoadLmCheckpoint(backbone / "model");
    const LmConfig merged = MergeFinetune(lm.config(), config.finetune);
    LmTrainReport report = Stage("train/finetune", [&] {
      return FinetunePhonemePipeline(lm, corpus, task, ctx->g2p, ctx->tokenizer,
                                     merged);
    });
    snapshot["finetune"] = LmConfigToJson(merged);
    snapshot["artifacts"] = {{"phoneme_backbone", backbone.string()},
                             {"p2g", p2g_dir.string()}};
    snapshot["run_config"] = config.raw;
    run = CreateMethodRun(config.runs_root, config.method, task, config.seed,
                          snapshot);
    lm.Save(run.dir / "checkpoints" / "model");
    WriteLossCurve(report, run.dir / "loss_curve.json");
  } else if (config.method == kMethodJointTemplate) {
    const fs::path backbone = Stage("train/grapheme-backbone",
                                    [&] { return EnsureGraphemeBackbone(*ctx); });
    NeuralLm lm = LoadLmCheckpoint(backbone / "model");
    const LmConfig merged = MergeFinetune(lm.config(), config.finetune);
    TG_INFO() << "building joint training set: four template renderings per "
                 "training example";
    JointFinetune joint = Stage("train/finetune", [&] {
      return FinetuneJointTemplate(lm, corpus, task, ctx->g2p, ctx->tokenizer,
                                   merged, config.seed);
    });
    TG_INFO() << "joint training set: " << joint.sequences << " sequences";
    snapshot["finetune"] = LmConfigToJson(merged);
    snapshot["joint_sequences"] = joint.sequences;
    snapshot["artifacts"] = {{"grapheme_backbone", backbone.string()}};
    snapshot["run_config"] = config.raw;
    run = CreateMethodRun(config.runs_root, config.method, task, config.seed,
                          snapshot);
    lm.Save(run.dir / "checkpoints" / "model");
    WriteLossCurve(joint.report, run.dir / "loss_curve.json");
  } else {
    throw ConfigError("train: unknown method " + config.method);
  }
  ReleaseRunLock(run.dir);
  TG_INFO() << "trained " << config.method << " for " << config.task << ": "
            << run.dir.string();
  return run.dir;
}

std::filesystem::path CmdGenerate(const RunConfig& config,
                                  const std::filesystem::path& run_dir) {
  std::unique_ptr<PipelineContext> ctx = MakeContext(config);
  Corpus corpus = Stage("generate/load", [&] { return LoadPreparedCorpus(*ctx); });

  const nlohmann::json snap =
      Stage("generate/load", [&] { return ParseJsonFile(run_dir / "config.json"); });
  std::string method;
  TaskSetting task = TaskSetting::kPrompt;
  std::uint64_t seed = 0;
  DecodingConfig decoding;
  Stage("generate/load", [&] {
    if (!snap.contains("method") || !snap.contains("task") ||
        !snap.contains("seed") || !snap.contains("decoding")) {
      throw DataError("run config " + (run_dir / "config.json").string() +
                      " is missing method/task/seed/decoding");
    }
    method = snap["method"].get<std::string>();
    task = TaskSettingFromName(snap["task"].get<std::string>());
    seed = snap["seed"].get<std::uint64_t>();
    decoding = DecodingConfigFromJson(snap["decoding"]);
    decoding.Validate();
  });

  const fs::path checkpoints = run_dir / "checkpoints";
  std::vector<GenerationRecord> records;
  if (method == kMethodG2g || method == kMethodJointTemplate) {
    NeuralLm lm = LoadLmCheckpoint(checkpoints / "model");
    records = Stage("generate/decode", [&] {
      return GenerateTemplateCompletions(lm, ctx->tokenizer, corpus, task,
                                         decoding, seed, method);
    });
    if (method == kMethodJointTemplate) {
      // Inference is a pure grapheme-template completion; the phonemizer is
      // never consulted.
      TG_INFO() << "joint-template inference used 0 grapheme-to-phoneme calls";
    }
  } else if (method == kMethodStyleTransfer) {
    NeuralLm stage1 = LoadLmCheckpoint(checkpoints / "stage1");
    NeuralLm twisterizer = LoadLmCheckpoint(checkpoints / "twisterizer");
    records = Stage("generate/decode", [&] {
      return StyleTransferGenerate(stage1, twisterizer, ctx->tokenizer, corpus,
                                   task, decoding, seed);
    });
  } else if (method == kMethodPhonemePipeline) {
    NeuralLm lm = LoadLmCheckpoint(checkpoints / "model");
    fs::path p2g_dir;
    if (snap.contains("artifacts") && snap["artifacts"].contains("p2g")) {
      p2g_dir = snap["artifacts"]["p2g"].get<std::string>();
    }
    if (p2g_dir.empty() || !fs::exists(p2g_dir / "COMPLETE")) {
      p2g_dir = Stage("generate/p2g", [&] { return EnsureP2g(*ctx); });
    }
    P2gModel p2g = Stage("generate/p2g",
                         [&] { return P2gModel::Load(p2g_dir / "model"); });
    records = Stage("generate/decode", [&] {
      return PhonemePipelineGenerate(lm, ctx->g2p, p2g, ctx->restorer,
                                     ctx->tokenizer, corpus, task, decoding,
                                     seed);
    });
  } else {
    throw DataError("generate: unknown method in run config: " + method);
  }

  const bool any_ok =
      std::any_of(records.begin(), records.end(),
                  [](const GenerationRecord& r) { return !r.failed; });
  if (records.empty() || !any_ok) {
    std::string first = records.empty() ? "no test examples" : records.front().error;
    throw BackendError("generate: every test example failed; first error: " +
                       first);
  }

  const fs::path out = run_dir / "generations.jsonl";
  AcquireRunLock(run_dir);
  try {
    Stage("generate/write", [&] { WriteGenerations(records, out); });
  } catch (...) {
    ReleaseRunLock(run_dir);
    throw;
  }
  ReleaseRunLock(run_dir);
  TG_INFO() << "wrote " << records.size() << " generations to " << out.string();
  return run_dir;
}

std::filesystem::path CmdEvaluate(const RunConfig& config,
                                  const std::vector<std::filesystem::path>& run_dirs,
                                  const std::string& out_dir) {
  if (run_dirs.empty()) {
    throw ConfigError("evaluate: at least one run directory is required");
  }
  std::unique_ptr<PipelineContext> ctx = MakeContext(config);
  Corpus corpus = Stage("evaluate/load", [&] { return LoadPreparedCorpus(*ctx); });

  const fs::path classifier_dir =
      Stage("evaluate/difficulty-model", [&] { return EnsureClassifier(*ctx); });
  DifficultyClassifier classifier = Stage("evaluate/difficulty-model", [&] {
    return DifficultyClassifier::Load(classifier_dir, &ctx->inventory);
  });
  const fs::path backbone = Stage("evaluate/fluency-model",
                                  [&] { return EnsureGraphemeBackbone(*ctx); });
  NeuralLm fluency_lm = LoadLmCheckpoint(backbone / "model");

  RelevanceScorer relevance(&ctx->embedder);
  Stage("evaluate/relevance-baseline", [&] {
    std::vector<std::string> keyword_strings;
    std::vector<std::string> texts;
    for (const TwisterExample& example : corpus.examples) {
      if (example.split != Split::kTrain || example.keywords.empty()) continue;
      keyword_strings.push_back(JoinKeywordsForRelevance(example.keywords));
      texts.push_back(example.text);
    }
    relevance.CalibrateBaseline(keyword_strings, texts, config.seed,
                                config.relevance_baseline_pairs);
    TG_INFO() << "relevance baseline (mean mismatched-pair F): "
              << relevance.baseline();
  });

  EvaluationBackends backends;
  backends.classifier = &classifier;
  backends.g2p = &ctx->g2p;
  backends.fluency_lm = &fluency_lm;
  backends.tokenizer = &ctx->tokenizer;
  backends.relevance = &relevance;

  std::map<std::string, std::vector<std::string>> keywords_by_id;
  for (const TwisterExample& example : corpus.examples) {
    keywords_by_id[example.id] = example.keywords;
  }

  const fs::path out =
      out_dir.empty() ? NewEvaluationDir(config.runs_root) : fs::path(out_dir);
  fs::create_directories(out);

  std::vector<EvaluationReport> reports;
  std::vector<TaskSetting> tasks_seen;
  std::set<std::string> used_names;
  const auto unique_name = [&used_names](const std::string& base) {
    std::string name = base;
    for (int suffix = 2; !used_names.insert(name).second; ++suffix) {
      name = base + "-" + std::to_string(suffix);
    }
    return name;
  };
  const auto write_report = [&](const EvaluationReport& report) {
    const std::string name =
        unique_name(report.method + "-" + TaskSettingName(report.task));
    WriteReportRows(report, out / (name + ".rows.jsonl"));
    WriteReportSummary(report, out / (name + ".summary.json"));
  };

  for (const fs::path& dir : run_dirs) {
    const nlohmann::json snap =
        Stage("evaluate/load", [&] { return ParseJsonFile(dir / "config.json"); });
    const std::string method = snap.at("method").get<std::string>();
    const TaskSetting task =
        TaskSettingFromName(snap.at("task").get<std::string>());
    std::vector<GenerationRecord> records = Stage("evaluate/load", [&] {
      return LoadGenerations(dir / "generations.jsonl");
    });
    EvaluationReport report = Stage("evaluate/score", [&] {
      return EvaluateGenerations(records, method, task, backends,
                                 keywords_by_id);
    });
    write_report(report);
    reports.push_back(std::move(report));
    if (std::find(tasks_seen.begin(), tasks_seen.end(), task) ==
        tasks_seen.end()) {
      tasks_seen.push_back(task);
    }
  }

  for (TaskSetting task : tasks_seen) {
    EvaluationReport gold = Stage("evaluate/score", [&] {
      return EvaluateGold(corpus, task, backends);
    });
    write_report(gold);
    reports.push_back(std::move(gold));
  }

  const std::string table = FormatComparisonTable(reports);
  WriteStringToFile(out / "comparison.txt", table);

  nlohmann::ordered_json meta;
  meta["runs"] = nlohmann::ordered_json::array();
  for (const fs::path& dir : run_dirs) meta["runs"].push_back(dir.string());
  meta["relevance_baseline"] = relevance.baseline();
  meta["run_config"] = config.raw;
  WriteStringToFile(out / "config.json", meta.dump(2) + "\n");

  TG_INFO() << "evaluation written to " << out.string();
  return out;
}

int RunCli(int argc, const char* const* argv) {
  CLI::App app{"tongue-twister generation and evaluation pipeline"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path = "configs/desk.json";
  std::vector<std::string> overrides;
  std::string task_flag;
  std::string method_flag;
  std::string out_flag;
  std::uint64_t seed_flag = 0;
  app.add_option("-c,--config", config_path, "JSON run configuration")
      ->capture_default_str();
  app.add_option("--override", overrides,
                 "dotted config override, e.g. decoding.top_p=0.9 (repeatable)")
      ->allow_extra_args(false);
  CLI::Option* task_opt =
      app.add_option("--task", task_flag, "task: tt-prompt | tt-keyword");
  CLI::Option* method_opt = app.add_option(
      "--method", method_flag,
      "method: g2g | style-transfer | phoneme-pipeline | joint-template");
  CLI::Option* seed_opt = app.add_option("--seed", seed_flag, "master seed");
  CLI::Option* out_opt = app.add_option(
      "--out", out_flag,
      "output root (prepare: data dir; train: runs root; evaluate: report dir)");

  CLI::App* prepare = app.add_subcommand(
      "prepare", "vet, enrich, and split the corpus; build the difficulty dataset");
  CLI::App* train = app.add_subcommand(
      "train", "fine-tune the configured method and write a run directory");
  CLI::App* generate = app.add_subcommand(
      "generate", "decode the test split with a trained run's checkpoints");
  std::string run_dir_arg;
  generate->add_option("run_dir", run_dir_arg, "run directory created by `train`")
      ->required();
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "score run generations against the gold references");
  std::vector<std::string> eval_dirs;
  evaluate->add_option("run_dirs", eval_dirs,
                       "run directories holding generations.jsonl")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // bad usage is a configuration error
  }

  try {
    std::vector<std::string> all_overrides = overrides;
    if (task_opt->count() > 0) all_overrides.push_back("task=" + task_flag);
    if (method_opt->count() > 0) {
      all_overrides.push_back("method=" + method_flag);
    }
    if (seed_opt->count() > 0) {
      all_overrides.push_back("seed=" + std::to_string(seed_flag));
    }
    if (out_opt->count() > 0) {
      if (prepare->parsed()) {
        all_overrides.push_back("paths.data_dir=" + out_flag);
      } else if (train->parsed() || generate->parsed()) {
        all_overrides.push_back("paths.runs_root=" + out_flag);
      }
    }
    const RunConfig config = LoadRunConfig(config_path, all_overrides);

    if (prepare->parsed()) {
      CmdPrepare(config);
      std::cout << config.data_dir << "\n";
    } else if (train->parsed()) {
      std::cout << CmdTrain(config).string() << "\n";
    } else if (generate->parsed()) {
      std::cout << CmdGenerate(config, run_dir_arg).string() << "\n";
    } else if (evaluate->parsed()) {
      std::vector<fs::path> dirs(eval_dirs.begin(), eval_dirs.end());
      const std::string eval_out = out_opt->count() > 0 ? out_flag : "";
      const fs::path out = CmdEvaluate(config, dirs, eval_out);
      std::cout << ReadFileToString(out / "comparison.txt");
      std::cout << out.string() << "\n";
    }
    return 0;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 2;
  } catch (const BackendError& e) {
    std::cerr << "backend error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace twistgen
