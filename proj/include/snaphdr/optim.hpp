#pragma once

#include <vector>

#include "snaphdr/tensor.hpp"

namespace snaphdr::autonet {

struct AdamConfig {
  double lr = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

/// Standard bias-corrected Adam over a fixed parameter list.
class AdamState {
 public:
  AdamState(const std::vector<NamedTensor>& params, const AdamConfig& cfg);

  /// One update from the gradients currently stored in the parameters.
  void step(const std::vector<NamedTensor>& params);

  long step_count() const { return step_; }
  const AdamConfig& config() const { return cfg_; }

 private:
  AdamConfig cfg_;
  long step_ = 0;
  std::vector<std::vector<double>> m_, v_;
};

}  // namespace snaphdr::autonet
