// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#include "sirnn/trainer/trainer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <random>

#include "json.hpp"
#include "sirnn/evalkit/evalkit.hpp"
#include "sirnn/util/parallel.hpp"

namespace sirnn::trainer {

namespace {

constexpr std::size_t kMaxChunks = 16;

template <typename T>
void accumulate(numkit::GradientMap<T>& into, numkit::GradientMap<T>&& from) {
  for (auto& [name, g] : from) {
    auto it = into.find(name);
    if (it == into.end()) {
      into.emplace(name, std::move(g));
      continue;
    }
    T* dst = it->second.raw();
    const T* src = g.raw();
    for (std::size_t i = 0; i < g.size(); ++i) dst[i] += src[i];
  }
}

}  // namespace

void validate(const TrainConfig& c) {
  auto fail = [](const std::string& what) {
    throw Error(ErrorCode::kInvalidArgument, "train config: " + what);
  };
  if (!(c.learning_rate > 0)) fail("learning_rate must be positive");
  if (!(c.adam_beta1 >= 0 && c.adam_beta1 < 1)) fail("adam_beta1 must lie in [0, 1)");
  if (!(c.adam_beta2 >= 0 && c.adam_beta2 < 1)) fail("adam_beta2 must lie in [0, 1)");
  if (!(c.adam_eps > 0)) fail("adam_eps must be positive");
  if (!(c.l2 >= 0)) fail("l2 must be non-negative");
  if (c.batch_size == 0) fail("batch_size must be positive");
  if (c.max_epochs == 0) fail("max_epochs must be positive");
  if (c.patience > c.max_epochs) fail("patience exceeds max_epochs");
  if (!(c.init_range > 0)) fail("init_range must be positive");
}

template <typename T>
ParameterStore<T> init_params(const ModelConfig& config, std::uint64_t seed, double range) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-range, range);
  ParameterStore<T> store;
  for (const auto& [name, shape] : parameter_shapes(config)) {
    numkit::Tensor<T> t(shape);
    for (T& v : t.data()) v = static_cast<T>(dist(rng));
    store.set(name, std::move(t));
  }
  return store;
}

template <typename T>
void adam_step(ParameterStore<T>& params, const numkit::GradientMap<T>& grads,
               OptimizerState& state, const TrainConfig& c) {
  ++state.step;
  const double t = static_cast<double>(state.step);
  const double correct1 = 1.0 - std::pow(c.adam_beta1, t);
  const double correct2 = 1.0 - std::pow(c.adam_beta2, t);
  for (const auto& [name, g] : grads) {
    auto& theta = params.at(name);
    if (theta.shape() != g.shape()) {
      throw Error(ErrorCode::kShape, "gradient of '" + name + "' is shaped " +
                                         numkit::shape_string(g.shape()) + ", parameter " +
                                         numkit::shape_string(theta.shape()));
    }
    auto m_it = state.m.try_emplace(name, numkit::Tensor<double>(g.shape())).first;
    auto v_it = state.v.try_emplace(name, numkit::Tensor<double>(g.shape())).first;
    double* m = m_it->second.raw();
    double* v = v_it->second.raw();
    T* p = theta.raw();
    const T* gp = g.raw();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const double gi = static_cast<double>(gp[i]) + c.l2 * static_cast<double>(p[i]);
      m[i] = c.adam_beta1 * m[i] + (1 - c.adam_beta1) * gi;
      v[i] = c.adam_beta2 * v[i] + (1 - c.adam_beta2) * gi * gi;
      const double m_hat = m[i] / correct1;
      const double v_hat = v[i] / correct2;
      p[i] = static_cast<T>(p[i] - c.learning_rate * m_hat / (std::sqrt(v_hat) + c.adam_eps));
    }
  }
}

BatchGradient batch_gradient(const SelectionModel<float>& model,
                             std::span<const corpus::SelectionSample* const> batch,
                             std::size_t workers) {
  if (batch.empty()) throw Error(ErrorCode::kInvalidArgument, "empty batch");
  const std::size_t n = batch.size();
  const std::size_t chunks = std::min(kMaxChunks, n);
  std::vector<numkit::GradientMap<float>> partial(chunks);
  std::vector<double> losses(chunks, 0.0);
  util::parallel_for(chunks, workers, [&](std::size_t c) {
    for (std::size_t i = c * n / chunks; i < (c + 1) * n / chunks; ++i) {
      const auto& sample = *batch[i];
      try {
        numkit::Tape<float> tape;
        auto loss = model.loss(tape, sample);
        losses[c] += loss.value()[0];
        accumulate(partial[c], tape.backward(loss));
      } catch (const Error& e) {
        throw Error(e.code(), "sample '" + sample.doc_id + "' at time " +
                                  std::to_string(sample.time) + ": " + e.what());
      }
    }
  });
  BatchGradient out;
  for (std::size_t c = 0; c < chunks; ++c) {
    out.loss += losses[c];
    accumulate(out.grads, std::move(partial[c]));
  }
  out.loss /= static_cast<double>(n);
  const float inv = 1.0f / static_cast<float>(n);
  for (auto& [_, g] : out.grads) {
    for (float& v : g.data()) v *= inv;
  }
  return out;
}

bool EarlyStopping::observe(double metric) {
  ++epoch_;
  improved_ = epoch_ == 1 || metric > best_;
  if (improved_) {
    best_ = metric;
    best_epoch_ = epoch_;
    stale_ = 0;
    return false;
  }
  ++stale_;
  return patience_ > 0 && stale_ >= patience_;
}

std::string epoch_log_json(const EpochLog& log) {
  nlohmann::ordered_json j;
  j["epoch"] = log.epoch;
  j["train_loss"] = log.train_loss;
  j["dev_adr"] = log.dev_adr;
  j["dev_res"] = log.dev_res;
  j["dev_adr_res"] = log.dev_adr_res;
  j["seconds"] = log.seconds;
  return j.dump();
}

TrainResult train(SelectionModel<float>& model, const TrainConfig& config,
                  std::span<const corpus::SelectionSample> train_samples,
                  std::span<const corpus::SelectionSample> dev_samples,
                  const EpochCallback& on_epoch) {
  validate(config);
  if (train_samples.empty()) throw Error(ErrorCode::kInvalidArgument, "empty training set");
  if (dev_samples.empty()) throw Error(ErrorCode::kInvalidArgument, "empty dev set");

  TrainResult result;
  result.best_params = model.parameters();
  OptimizerState state;
  EarlyStopping stopping(config.patience);
  std::vector<std::size_t> order(train_samples.size());
  std::vector<const corpus::SelectionSample*> batch;
  const NeuralSelector selector(model);

  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    std::iota(order.begin(), order.end(), 0);
    std::seed_seq seq{config.seed, static_cast<std::uint64_t>(epoch)};
    std::mt19937_64 rng(seq);
    std::shuffle(order.begin(), order.end(), rng);

    double loss_sum = 0;
    for (std::size_t b = 0; b < order.size(); b += config.batch_size) {
      batch.clear();
      for (std::size_t i = b; i < std::min(order.size(), b + config.batch_size); ++i) {
        batch.push_back(&train_samples[order[i]]);
      }
      BatchGradient step;
      try {
        step = batch_gradient(model, batch, config.workers);
      } catch (const Error& e) {
        throw Error(e.code(), "epoch " + std::to_string(epoch) + ", batch " +
                                  std::to_string(b / config.batch_size + 1) + ": " + e.what());
      }
      if (!std::isfinite(step.loss)) {
        throw Error(ErrorCode::kNumeric, "epoch " + std::to_string(epoch) + ", batch " +
                                             std::to_string(b / config.batch_size + 1) +
                                             ": non-finite loss");
      }
      loss_sum += step.loss * static_cast<double>(batch.size());
      adam_step(model.parameters(), step.grads, state, config);
    }

    const auto report = evalkit::evaluate(selector, dev_samples, config.workers);
    EpochLog log;
    log.epoch = epoch;
    log.train_loss = loss_sum / static_cast<double>(train_samples.size());
    log.dev_adr = report.adr_acc;
    log.dev_res = report.res_acc;
    log.dev_adr_res = report.adr_res_acc;
    log.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    result.log.push_back(log);
    if (on_epoch) on_epoch(log);

    const bool stop = stopping.observe(report.adr_res_acc);
    if (stopping.improved()) result.best_params = model.parameters();
    if (stop) break;
  }
  result.best_epoch = stopping.best_epoch();
  result.best_dev_adr_res = stopping.best();
  model.parameters() = result.best_params;
  return result;
}

template ParameterStore<float> init_params<float>(const ModelConfig&, std::uint64_t, double);
template ParameterStore<double> init_params<double>(const ModelConfig&, std::uint64_t, double);
template void adam_step<float>(ParameterStore<float>&, const numkit::GradientMap<float>&,
                               OptimizerState&, const TrainConfig&);
template void adam_step<double>(ParameterStore<double>&, const numkit::GradientMap<double>&,
                                OptimizerState&, const TrainConfig&);

}  // namespace sirnn::trainer
