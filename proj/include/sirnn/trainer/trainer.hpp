// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "sirnn/corpus/sample.hpp"
#include "sirnn/model/model.hpp"

namespace sirnn::trainer {

struct TrainConfig {
  double learning_rate = 1e-3;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  /// Coupled weight decay: l2 * theta is added to every gradient.
  double l2 = 0.001;
  std::size_t batch_size = 128;
  std::size_t max_epochs = 30;
  /// Consecutive non-improving epochs before stopping; 0 disables it.
  std::size_t patience = 5;
  double init_range = 0.01;
  std::uint64_t seed = 0;
  /// Threads for the per-sample forward/backward passes. Results do not
  /// depend on this value.
  std::size_t workers = 1;
};

void validate(const TrainConfig& config);

/// Every trainable tensor drawn from U(-range, range), in parameter-name
/// order, from one generator seeded with `seed`.
template <typename T>
ParameterStore<T> init_params(const ModelConfig& config, std::uint64_t seed, double range);

struct OptimizerState {
  std::map<std::string, numkit::Tensor<double>, std::less<>> m;
  std::map<std::string, numkit::Tensor<double>, std::less<>> v;
  std::uint64_t step = 0;
};

/// One bias-corrected Adam update of every parameter named in `grads`.
template <typename T>
void adam_step(ParameterStore<T>& params, const numkit::GradientMap<T>& grads,
               OptimizerState& state, const TrainConfig& config);

struct BatchGradient {
  double loss = 0;  // mean over the batch
  numkit::GradientMap<float> grads;
};

/// Mean loss and gradient over `batch`. Samples are split into a fixed
/// number of chunks whose partial sums are added in order, so the result is
/// bit-identical for any worker count.
BatchGradient batch_gradient(const SelectionModel<float>& model,
                             std::span<const corpus::SelectionSample* const> batch,
                             std::size_t workers);

/// Strict-improvement early stopping on a maximized metric.
class EarlyStopping {
 public:
  explicit EarlyStopping(std::size_t patience) : patience_(patience) {}

  /// Records the metric of the next epoch; true once training should stop.
  bool observe(double metric);
  bool improved() const { return improved_; }
  std::size_t best_epoch() const { return best_epoch_; }
  double best() const { return best_; }
  std::size_t epochs() const { return epoch_; }

 private:
  std::size_t patience_;
  std::size_t epoch_ = 0;
  std::size_t best_epoch_ = 0;
  std::size_t stale_ = 0;
  double best_ = 0;
  bool improved_ = false;
};

struct EpochLog {
  std::size_t epoch = 0;
  double train_loss = 0;
  double dev_adr = 0;
  double dev_res = 0;
  double dev_adr_res = 0;
  double seconds = 0;
};

std::string epoch_log_json(const EpochLog& log);

struct TrainResult {
  ParameterStore<float> best_params;
  std::size_t best_epoch = 0;
  double best_dev_adr_res = 0;
  std::vector<EpochLog> log;
};

using EpochCallback = std::function<void(const EpochLog&)>;

/// Trains `model` in place. After each epoch the dev set is scored and the
/// parameters with the best dev ADR-RES are kept; on return the model holds
/// those parameters.
TrainResult train(SelectionModel<float>& model, const TrainConfig& config,
                  std::span<const corpus::SelectionSample> train_samples,
                  std::span<const corpus::SelectionSample> dev_samples,
                  const EpochCallback& on_epoch = {});

}  // namespace sirnn::trainer
