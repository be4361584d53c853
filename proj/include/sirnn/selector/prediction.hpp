// Copyright 2026 The SI-RNN Toolkit Authors. Apache 2.0 License.

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "sirnn/corpus/sample.hpp"
#include "sirnn/selector/selector.hpp"

namespace sirnn {

/// Joint scores of the pairs chosen by joint and by separate selection.
struct JointComparison {
  double joint_pick = 0;
  double separate_pick = 0;
};

struct Prediction {
  std::string addressee;
  std::size_t response = 0;
  std::optional<selector::ScoredPair> scored;
  std::optional<JointComparison> joint;
  /// Set when a heuristic had to fall back to a random addressee.
  bool fallback = false;
};

/// Anything that picks an (addressee, response) pair for a sample. `index` is
/// the sample's position in the evaluated set; stochastic selectors derive
/// their randomness from it so results do not depend on evaluation order.
class Selector {
 public:
  virtual ~Selector() = default;
  virtual Prediction predict(const corpus::SelectionSample& sample,
                             std::size_t index) const = 0;
  virtual std::string name() const = 0;
};

}  // namespace sirnn
