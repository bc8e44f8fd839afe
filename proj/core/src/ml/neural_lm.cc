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

#include "twistgen/ml/neural_lm.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numeric>

#include <nlohmann/json.hpp>

#include "twistgen/common/error.h"
#include "twistgen/common/log.h"
#include "twistgen/common/rng.h"
#include "twistgen/ml/adam.h"
#include "twistgen/ml/sampling.h"
#include "twistgen/ml/schedule.h"

namespace twistgen {
namespace {

constexpr std::uint32_t kParamsMagic = 0x54474c4d;  // "TGLM"

double NormalUnit(std::mt19937_64& rng) {
  const double u1 = UniformUnit(rng);
  const double u2 = UniformUnit(rng);
  return std::sqrt(-2.0 * std::log1p(-u1)) *
         std::cos(2.0 * 3.14159265358979323846 * u2);
}

Eigen::MatrixXd RandomMatrix(Eigen::Index rows, Eigen::Index cols, double std,
                             std::mt19937_64& rng) {
  Eigen::MatrixXd m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = std * NormalUnit(rng);
  }
  return m;
}

void WriteMatrix(std::ofstream& out, const Eigen::MatrixXd& m) {
  const std::int64_t rows = m.rows();
  const std::int64_t cols = m.cols();
  out.write(reinterpret_cast<const char*>(&rows), sizeof(rows));
  out.write(reinterpret_cast<const char*>(&cols), sizeof(cols));
  out.write(reinterpret_cast<const char*>(m.data()),
            static_cast<std::streamsize>(sizeof(double) * m.size()));
}

Eigen::MatrixXd ReadMatrix(std::ifstream& in) {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  in.read(reinterpret_cast<char*>(&rows), sizeof(rows));
  in.read(reinterpret_cast<char*>(&cols), sizeof(cols));
  if (!in || rows < 0 || cols < 0 || rows * cols > (1LL << 30)) {
    throw DataError("corrupt model parameter file");
  }
  Eigen::MatrixXd m(rows, cols);
  in.read(reinterpret_cast<char*>(m.data()),
          static_cast<std::streamsize>(sizeof(double) * m.size()));
  if (!in) throw DataError("truncated model parameter file");
  return m;
}

}  // namespace

void LmConfig::Validate() const {
  if (context < 1) throw ConfigError("lm context must be >= 1");
  if (embed_dim < 1 || hidden_dim < 1) {
    throw ConfigError("lm dimensions must be >= 1");
  }
  if (epochs < 1) throw ConfigError("lm epochs must be >= 1");
  if (batch_size < 1) throw ConfigError("lm batch_size must be >= 1");
  if (lr <= 0) throw ConfigError("lm lr must be > 0");
  if (warmup_steps < 0) throw ConfigError("lm warmup_steps must be >= 0");
  if (weight_decay < 0) throw ConfigError("lm weight_decay must be >= 0");
  if (val_fraction < 0 || val_fraction >= 1) {
    throw ConfigError("lm val_fraction must be in [0, 1)");
  }
  if (max_seq_len < 1) throw ConfigError("lm max_seq_len must be >= 1");
}

NeuralLm::NeuralLm(Vocab vocab, const LmConfig& config)
    : NeuralLm(std::move(vocab), config, /*init_weights=*/true) {}

NeuralLm::NeuralLm(Vocab vocab, const LmConfig& config, bool init_weights)
    : vocab_(std::move(vocab)), config_(config) {
  config_.Validate();
  if (vocab_.size() <= Vocab().size()) {
    throw DataError("lm vocabulary has no regular tokens");
  }
  const Eigen::Index v = vocab_.size();
  const Eigen::Index d = config_.embed_dim;
  const Eigen::Index h = config_.hidden_dim;
  const Eigen::Index in = static_cast<Eigen::Index>(config_.context) * d;
  if (init_weights) {
    std::mt19937_64 rng = MakeEngine(config_.seed, "lm-init");
    params_.embed = RandomMatrix(v, d, 0.1, rng);
    params_.w1 =
        RandomMatrix(in, h, 1.0 / std::sqrt(static_cast<double>(in)), rng);
    params_.b1 = Eigen::MatrixXd::Zero(1, h);
    params_.w2 =
        RandomMatrix(h, v, 1.0 / std::sqrt(static_cast<double>(h)), rng);
    params_.b2 = Eigen::MatrixXd::Zero(1, v);
  }
}

void NeuralLm::BuildExamples(const std::vector<std::vector<int>>& sequences,
                             const std::vector<std::size_t>& loss_begins,
                             std::vector<std::vector<int>>& contexts,
                             std::vector<int>& targets) const {
  if (!loss_begins.empty() && loss_begins.size() != sequences.size()) {
    throw DataError("loss mask length mismatch");
  }
  const int ctx = config_.context;
  const int bos = vocab_.bos_id();
  const int eos = vocab_.eos_id();
  for (std::size_t s = 0; s < sequences.size(); ++s) {
    const std::vector<int>& seq = sequences[s];
    std::vector<int> ids(seq.begin(),
                         seq.size() > config_.max_seq_len
                             ? seq.begin() + static_cast<std::ptrdiff_t>(
                                                 config_.max_seq_len)
                             : seq.end());
    ids.push_back(eos);
    const std::size_t begin = loss_begins.empty() ? 0 : loss_begins[s];
    std::vector<int> window(static_cast<std::size_t>(ctx), bos);
    for (std::size_t pos = 0; pos < ids.size(); ++pos) {
      const int target = ids[pos];
      if (target < 0 || target >= vocab_.size()) {
        throw DataError("token id out of vocabulary range");
      }
      if (pos >= begin) {
        contexts.push_back(window);
        targets.push_back(target);
      }
      window.erase(window.begin());
      window.push_back(target);
    }
  }
}

Eigen::MatrixXd NeuralLm::GatherInputs(
    const std::vector<std::vector<int>>& contexts,
    const std::vector<std::size_t>& rows, std::size_t begin,
    std::size_t count) const {
  const Eigen::Index d = config_.embed_dim;
  Eigen::MatrixXd x(count, static_cast<Eigen::Index>(config_.context) * d);
  for (std::size_t b = 0; b < count; ++b) {
    const std::vector<int>& ctx = contexts[rows[begin + b]];
    for (int p = 0; p < config_.context; ++p) {
      x.block(static_cast<Eigen::Index>(b), p * d, 1, d) =
          params_.embed.row(ctx[static_cast<std::size_t>(p)]);
    }
  }
  return x;
}

LmTrainReport NeuralLm::Train(
    const std::vector<std::vector<int>>& sequences) {
  return Train(sequences, config_);
}

LmTrainReport NeuralLm::Train(const std::vector<std::vector<int>>& sequences,
                              const LmConfig& config,
                              const std::vector<std::size_t>& loss_begins) {
  config.Validate();
  if (config.context != config_.context ||
      config.embed_dim != config_.embed_dim ||
      config.hidden_dim != config_.hidden_dim) {
    throw ConfigError("lm dimensions cannot change after construction");
  }
  config_ = config;
  if (sequences.empty()) throw DataError("no training sequences");
  if (!loss_begins.empty() && loss_begins.size() != sequences.size()) {
    throw DataError("loss mask length mismatch");
  }
  // Tail of the sequence list is held out for epoch selection.
  std::size_t n_val = static_cast<std::size_t>(
      config_.val_fraction * static_cast<double>(sequences.size()));
  if (sequences.size() >= 2 && n_val == 0) n_val = 1;
  const std::size_t n_train = sequences.size() - n_val;
  const std::vector<std::vector<int>> train_seqs(
      sequences.begin(), sequences.begin() + static_cast<std::ptrdiff_t>(n_train));
  const std::vector<std::vector<int>> val_seqs(
      sequences.begin() + static_cast<std::ptrdiff_t>(n_train), sequences.end());
  std::vector<std::size_t> train_begins;
  std::vector<std::size_t> val_begins;
  if (!loss_begins.empty()) {
    train_begins.assign(loss_begins.begin(),
                        loss_begins.begin() + static_cast<std::ptrdiff_t>(n_train));
    val_begins.assign(loss_begins.begin() + static_cast<std::ptrdiff_t>(n_train),
                      loss_begins.end());
  }

  std::vector<std::vector<int>> contexts;
  std::vector<int> targets;
  BuildExamples(train_seqs, train_begins, contexts, targets);
  std::vector<std::vector<int>> val_contexts;
  std::vector<int> val_targets;
  // Degenerate single-sequence input validates on itself.
  BuildExamples(val_seqs.empty() ? train_seqs : val_seqs,
                val_seqs.empty() ? train_begins : val_begins, val_contexts,
                val_targets);
  if (contexts.empty() || val_contexts.empty()) {
    throw DataError("loss mask excludes every position");
  }

  const std::size_t n = contexts.size();
  const std::size_t batch = static_cast<std::size_t>(config_.batch_size);
  const long steps_per_epoch = static_cast<long>((n + batch - 1) / batch);
  const long total_steps = steps_per_epoch * config_.epochs;
  // The schedule needs at least one decay step after warmup.
  const long warmup = std::min(config_.warmup_steps, total_steps - 1);

  AdamConfig opt_cfg;
  opt_cfg.lr = config_.lr;
  opt_cfg.weight_decay = config_.weight_decay;
  AdamW opt(opt_cfg);
  const std::size_t s_embed = opt.Register(params_.embed.rows(),
                                           params_.embed.cols());
  const std::size_t s_w1 = opt.Register(params_.w1.rows(), params_.w1.cols());
  const std::size_t s_b1 = opt.Register(params_.b1.rows(), params_.b1.cols());
  const std::size_t s_w2 = opt.Register(params_.w2.rows(), params_.w2.cols());
  const std::size_t s_b2 = opt.Register(params_.b2.rows(), params_.b2.cols());

  LmTrainReport report;
  report.val_losses.push_back(ExamplesNll(val_contexts, val_targets));
  best_val_loss_ = report.val_losses[0];
  best_epoch_ = 0;
  Params best = params_;

  std::mt19937_64 shuffle_rng = MakeEngine(config_.seed, "lm-shuffle");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  const Eigen::Index d = config_.embed_dim;
  long step = 0;

  for (int epoch = 1; epoch <= config_.epochs; ++epoch) {
    // Partial Fisher-Yates with our own bounded draw keeps the permutation
    // identical across standard libraries.
    for (std::size_t i = n - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(
          UniformUnit(shuffle_rng) * static_cast<double>(i + 1));
      std::swap(order[i], order[std::min(j, i)]);
    }
    double epoch_loss = 0.0;
    std::size_t seen = 0;
    for (std::size_t begin = 0; begin < n; begin += batch) {
      const std::size_t count = std::min(batch, n - begin);
      const Eigen::MatrixXd x = GatherInputs(contexts, order, begin, count);
      const Eigen::MatrixXd pre =
          (x * params_.w1).rowwise() + params_.b1.row(0);
      const Eigen::MatrixXd hidden = pre.cwiseMax(0.0);
      Eigen::MatrixXd logits =
          (hidden * params_.w2).rowwise() + params_.b2.row(0);

      // Row-stable softmax; loss accumulates mean NLL over the batch.
      Eigen::MatrixXd probs(logits.rows(), logits.cols());
      double batch_loss = 0.0;
      for (Eigen::Index r = 0; r < logits.rows(); ++r) {
        const double max = logits.row(r).maxCoeff();
        const Eigen::ArrayXd e =
            (logits.row(r).transpose().array() - max).exp();
        const double z = e.sum();
        probs.row(r) = (e / z).matrix().transpose();
        const int t = targets[order[begin + static_cast<std::size_t>(r)]];
        batch_loss += max + std::log(z) - logits(r, t);
      }
      batch_loss /= static_cast<double>(count);
      if (!std::isfinite(batch_loss)) {
        throw BackendError("non-finite training loss");
      }
      epoch_loss += batch_loss * static_cast<double>(count);
      seen += count;

      Eigen::MatrixXd dlogits = probs;
      for (Eigen::Index r = 0; r < dlogits.rows(); ++r) {
        dlogits(r, targets[order[begin + static_cast<std::size_t>(r)]]) -= 1.0;
      }
      dlogits /= static_cast<double>(count);

      const Eigen::MatrixXd dw2 = hidden.transpose() * dlogits;
      const Eigen::MatrixXd db2 = dlogits.colwise().sum();
      Eigen::MatrixXd dhidden = dlogits * params_.w2.transpose();
      dhidden = (pre.array() > 0.0).select(dhidden, 0.0);
      const Eigen::MatrixXd dw1 = x.transpose() * dhidden;
      const Eigen::MatrixXd db1 = dhidden.colwise().sum();
      const Eigen::MatrixXd dx = dhidden * params_.w1.transpose();
      Eigen::MatrixXd dembed =
          Eigen::MatrixXd::Zero(params_.embed.rows(), params_.embed.cols());
      for (std::size_t b = 0; b < count; ++b) {
        const std::vector<int>& ctx = contexts[order[begin + b]];
        for (int p = 0; p < config_.context; ++p) {
          dembed.row(ctx[static_cast<std::size_t>(p)]) +=
              dx.block(static_cast<Eigen::Index>(b), p * d, 1, d);
        }
      }

      ++step;
      const double scale = WarmupCosine(step, warmup, total_steps + 1);
      opt.BeginStep();
      opt.Update(s_embed, params_.embed, dembed, scale);
      opt.Update(s_w1, params_.w1, dw1, scale);
      opt.Update(s_b1, params_.b1, db1, scale);
      opt.Update(s_w2, params_.w2, dw2, scale);
      opt.Update(s_b2, params_.b2, db2, scale);
    }
    report.train_losses.push_back(epoch_loss / static_cast<double>(seen));

    const double val = ExamplesNll(val_contexts, val_targets);
    if (!std::isfinite(val)) throw BackendError("non-finite validation loss");
    report.val_losses.push_back(val);
    if (val < best_val_loss_) {
      best_val_loss_ = val;
      best_epoch_ = static_cast<std::size_t>(epoch);
      best = params_;
    }
  }

  if (best_epoch_ == 0) {
    TG_WARN() << "no epoch improved on initial validation loss "
              << best_val_loss_;
  }
  params_ = best;
  report.best_epoch = best_epoch_;
  return report;
}

double NeuralLm::ExamplesNll(const std::vector<std::vector<int>>& contexts,
                             const std::vector<int>& targets) const {
  if (contexts.empty()) throw DataError("no examples to score");
  std::vector<std::size_t> rows(contexts.size());
  std::iota(rows.begin(), rows.end(), std::size_t{0});
  const std::size_t batch = 256;
  double total = 0.0;
  for (std::size_t begin = 0; begin < contexts.size(); begin += batch) {
    const std::size_t count = std::min(batch, contexts.size() - begin);
    const Eigen::MatrixXd x = GatherInputs(contexts, rows, begin, count);
    const Eigen::MatrixXd hidden =
        ((x * params_.w1).rowwise() + params_.b1.row(0)).cwiseMax(0.0);
    const Eigen::MatrixXd logits =
        (hidden * params_.w2).rowwise() + params_.b2.row(0);
    for (Eigen::Index r = 0; r < logits.rows(); ++r) {
      const double max = logits.row(r).maxCoeff();
      const double z = (logits.row(r).array() - max).exp().sum();
      total += max + std::log(z) -
               logits(r, targets[begin + static_cast<std::size_t>(r)]);
    }
  }
  return total / static_cast<double>(contexts.size());
}

Eigen::VectorXd NeuralLm::NextLogits(const std::vector<int>& ids) const {
  const int ctx = config_.context;
  std::vector<int> window(static_cast<std::size_t>(ctx), vocab_.bos_id());
  const std::size_t take =
      std::min(ids.size(), static_cast<std::size_t>(ctx));
  for (std::size_t i = 0; i < take; ++i) {
    const int id = ids[ids.size() - take + i];
    if (id < 0 || id >= vocab_.size()) {
      throw DataError("token id out of vocabulary range");
    }
    window[static_cast<std::size_t>(ctx) - take + i] = id;
  }
  const Eigen::Index d = config_.embed_dim;
  Eigen::MatrixXd x(1, static_cast<Eigen::Index>(ctx) * d);
  for (int p = 0; p < ctx; ++p) {
    x.block(0, p * d, 1, d) =
        params_.embed.row(window[static_cast<std::size_t>(p)]);
  }
  const Eigen::MatrixXd hidden =
      ((x * params_.w1).rowwise() + params_.b1.row(0)).cwiseMax(0.0);
  const Eigen::MatrixXd logits =
      (hidden * params_.w2).rowwise() + params_.b2.row(0);
  return logits.row(0).transpose();
}

double NeuralLm::MeanNll(const std::vector<int>& ids) const {
  if (ids.empty()) throw DataError("cannot score an empty sequence");
  std::vector<std::vector<int>> contexts;
  std::vector<int> targets;
  BuildExamples({ids}, {}, contexts, targets);
  return ExamplesNll(contexts, targets);
}

void NeuralLm::ExtendVocab(const std::vector<std::string>& tokens) {
  const int old_size = vocab_.size();
  for (const std::string& token : tokens) vocab_.Add(token);
  const int added = vocab_.size() - old_size;
  if (added == 0) return;
  // A fresh stream per extension keeps repeated growth deterministic.
  std::mt19937_64 rng =
      MakeEngine(config_.seed, "lm-extend:" + std::to_string(old_size));
  const Eigen::Index d = config_.embed_dim;
  const Eigen::Index h = config_.hidden_dim;
  params_.embed.conservativeResize(vocab_.size(), d);
  params_.embed.bottomRows(added) = RandomMatrix(added, d, 0.1, rng);
  params_.w2.conservativeResize(h, vocab_.size());
  params_.w2.rightCols(added) =
      RandomMatrix(h, added, 1.0 / std::sqrt(static_cast<double>(h)), rng);
  params_.b2.conservativeResize(1, vocab_.size());
  params_.b2.rightCols(added).setZero();
}

void NeuralLm::Save(const std::filesystem::path& dir) const {
  std::filesystem::create_directories(dir);
  vocab_.Save(dir / "vocab.txt");

  nlohmann::json meta;
  meta["context"] = config_.context;
  meta["embed_dim"] = config_.embed_dim;
  meta["hidden_dim"] = config_.hidden_dim;
  meta["epochs"] = config_.epochs;
  meta["batch_size"] = config_.batch_size;
  meta["lr"] = config_.lr;
  meta["warmup_steps"] = config_.warmup_steps;
  meta["weight_decay"] = config_.weight_decay;
  meta["val_fraction"] = config_.val_fraction;
  meta["max_seq_len"] = config_.max_seq_len;
  meta["seed"] = config_.seed;
  meta["vocab_size"] = vocab_.size();
  meta["best_epoch"] = best_epoch_;
  meta["best_val_loss"] = best_val_loss_;
  std::ofstream meta_out(dir / "meta.json");
  meta_out << meta.dump(2) << "\n";
  if (!meta_out) throw DataError("cannot write " + (dir / "meta.json").string());

  std::ofstream out(dir / "params.bin", std::ios::binary);
  if (!out) throw DataError("cannot write " + (dir / "params.bin").string());
  out.write(reinterpret_cast<const char*>(&kParamsMagic), sizeof(kParamsMagic));
  WriteMatrix(out, params_.embed);
  WriteMatrix(out, params_.w1);
  WriteMatrix(out, params_.b1);
  WriteMatrix(out, params_.w2);
  WriteMatrix(out, params_.b2);
  if (!out) throw DataError("failed writing model parameters");
}

NeuralLm NeuralLm::Load(const std::filesystem::path& dir) {
  std::ifstream meta_in(dir / "meta.json");
  if (!meta_in) throw DataError("missing checkpoint: " + dir.string());
  nlohmann::json meta;
  try {
    meta_in >> meta;
  } catch (const nlohmann::json::exception& e) {
    throw DataError("bad checkpoint metadata: " + std::string(e.what()));
  }
  LmConfig config;
  config.context = meta.at("context").get<int>();
  config.embed_dim = meta.at("embed_dim").get<int>();
  config.hidden_dim = meta.at("hidden_dim").get<int>();
  config.epochs = meta.at("epochs").get<int>();
  config.batch_size = meta.at("batch_size").get<int>();
  config.lr = meta.at("lr").get<double>();
  config.warmup_steps = meta.at("warmup_steps").get<long>();
  config.weight_decay = meta.at("weight_decay").get<double>();
  config.val_fraction = meta.at("val_fraction").get<double>();
  config.max_seq_len = meta.at("max_seq_len").get<std::size_t>();
  config.seed = meta.at("seed").get<std::uint64_t>();

  NeuralLm lm(Vocab::Load(dir / "vocab.txt"), config, /*init_weights=*/false);
  lm.best_epoch_ = meta.at("best_epoch").get<std::size_t>();
  lm.best_val_loss_ = meta.at("best_val_loss").get<double>();
  if (meta.at("vocab_size").get<int>() != lm.vocab_.size()) {
    throw DataError("checkpoint vocab size mismatch: " + dir.string());
  }

  std::ifstream in(dir / "params.bin", std::ios::binary);
  if (!in) throw DataError("missing checkpoint: " + dir.string());
  std::uint32_t magic = 0;
  in.read(reinterpret_cast<char*>(&magic), sizeof(magic));
  if (!in || magic != kParamsMagic) {
    throw DataError("corrupted checkpoint: " + (dir / "params.bin").string());
  }
  lm.params_.embed = ReadMatrix(in);
  lm.params_.w1 = ReadMatrix(in);
  lm.params_.b1 = ReadMatrix(in);
  lm.params_.w2 = ReadMatrix(in);
  lm.params_.b2 = ReadMatrix(in);
  if (lm.params_.embed.rows() != lm.vocab_.size() ||
      lm.params_.w2.cols() != lm.vocab_.size()) {
    throw DataError("checkpoint parameter shape mismatch: " + dir.string());
  }
  return lm;
}

}  // namespace twistgen
