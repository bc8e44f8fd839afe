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

#ifndef TWISTGEN_ML_NEURAL_LM_H_
#define TWISTGEN_ML_NEURAL_LM_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include <Eigen/Core>

#include "twistgen/ml/vocab.h"

namespace twistgen {

// Training hyperparameters for the feed-forward n-gram language model.
struct LmConfig {
  int context = 5;        // conditioning positions (n-1 of the n-gram)
  int embed_dim = 64;
  int hidden_dim = 256;
  int epochs = 5;
  int batch_size = 64;
  double lr = 5e-4;
  long warmup_steps = 100;
  double weight_decay = 0.01;
  double val_fraction = 0.1;
  std::size_t max_seq_len = 256;  // longer sequences are truncated
  std::uint64_t seed = 13;

  void Validate() const;  // throws ConfigError
};

// Loss curve of one training run. val_losses[0] is measured before the
// first update; entry e >= 1 is measured after epoch e. best_epoch indexes
// val_losses; 0 means no epoch improved on the starting weights.
struct LmTrainReport {
  std::vector<double> train_losses;
  std::vector<double> val_losses;
  std::size_t best_epoch = 0;
};

// Feed-forward n-gram neural language model: the `context` previous token
// embeddings are concatenated, passed through one ReLU layer, and projected
// to vocabulary logits. Small enough to train on a desk CPU in seconds yet
// a genuine causal LM: it supports fine-tuning, scoring, and sampling.
class NeuralLm {
 public:
  // Fresh model with seeded random weights over the given vocabulary.
  NeuralLm(Vocab vocab, const LmConfig& config);

  // Trains on encoded sequences (no <bos>/<eos>; they are added here).
  // Selects the epoch with the best validation loss and restores its
  // weights. Throws DataError on an empty list and BackendError when a
  // loss turns non-finite.
  LmTrainReport Train(const std::vector<std::vector<int>>& sequences);

  // Same, with fresh training hyperparameters (dimensions must match the
  // constructed model) and an optional loss mask: loss_begins[i] is the
  // first position of sequence i that contributes to the loss; earlier
  // tokens still condition the model. Empty means every position counts.
  LmTrainReport Train(const std::vector<std::vector<int>>& sequences,
                      const LmConfig& config,
                      const std::vector<std::size_t>& loss_begins = {});

  // Grows the vocabulary and the embedding/output layers with seeded
  // random rows for unseen tokens; existing weights are untouched.
  void ExtendVocab(const std::vector<std::string>& tokens);

  // Logits for the token following `ids` (uses the last `context` entries,
  // left-padded with <bos>).
  Eigen::VectorXd NextLogits(const std::vector<int>& ids) const;

  // Mean per-token negative log-likelihood of the sequence, including the
  // terminating <eos> prediction. Throws DataError on empty input.
  double MeanNll(const std::vector<int>& ids) const;

  void Save(const std::filesystem::path& dir) const;
  static NeuralLm Load(const std::filesystem::path& dir);

  const Vocab& vocab() const { return vocab_; }
  const LmConfig& config() const { return config_; }
  std::size_t best_epoch() const { return best_epoch_; }
  double best_val_loss() const { return best_val_loss_; }

 private:
  struct Params {
    Eigen::MatrixXd embed;  // V x d
    Eigen::MatrixXd w1;     // (context*d) x h
    Eigen::MatrixXd b1;     // 1 x h
    Eigen::MatrixXd w2;     // h x V
    Eigen::MatrixXd b2;     // 1 x V
  };

  NeuralLm(Vocab vocab, const LmConfig& config, bool init_weights);

  // Expands sequences into (context window, target) training examples,
  // skipping target positions before the sequence's loss_begins entry.
  void BuildExamples(const std::vector<std::vector<int>>& sequences,
                     const std::vector<std::size_t>& loss_begins,
                     std::vector<std::vector<int>>& contexts,
                     std::vector<int>& targets) const;
  // Mean NLL over prepared examples, batched; also used for validation.
  double ExamplesNll(const std::vector<std::vector<int>>& contexts,
                     const std::vector<int>& targets) const;
  Eigen::MatrixXd GatherInputs(const std::vector<std::vector<int>>& contexts,
                               const std::vector<std::size_t>& rows,
                               std::size_t begin, std::size_t count) const;

  Vocab vocab_;
  LmConfig config_;
  Params params_;
  std::size_t best_epoch_ = 0;
  double best_val_loss_ = 0.0;
};

}  // namespace twistgen

#endif  // TWISTGEN_ML_NEURAL_LM_H_
