#include "snaphdr/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace snaphdr::autonet {

AdamState::AdamState(const std::vector<NamedTensor>& params, const AdamConfig& cfg) : cfg_(cfg) {
  if (cfg.lr <= 0.0) throw std::invalid_argument("adam: lr must be positive");
  m_.reserve(params.size());
  v_.reserve(params.size());
  for (const NamedTensor& p : params) {
    m_.emplace_back(p.tensor->numel(), 0.0);
    v_.emplace_back(p.tensor->numel(), 0.0);
  }
}

void AdamState::step(const std::vector<NamedTensor>& params) {
  if (params.size() != m_.size()) throw std::invalid_argument("adam: parameter list changed");
  ++step_;
  const double c1 = 1.0 - std::pow(cfg_.beta1, static_cast<double>(step_));
  const double c2 = 1.0 - std::pow(cfg_.beta2, static_cast<double>(step_));
  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    Tensor& t = *params[pi].tensor;
    if (!t.has_grad()) throw std::invalid_argument("adam: missing gradient for " + params[pi].name);
    std::vector<double>& m = m_[pi];
    std::vector<double>& v = v_[pi];
    for (std::size_t i = 0; i < t.v.size(); ++i) {
      const double g = t.g[i];
      m[i] = cfg_.beta1 * m[i] + (1.0 - cfg_.beta1) * g;
      v[i] = cfg_.beta2 * v[i] + (1.0 - cfg_.beta2) * g * g;
      const double mHat = m[i] / c1;
      const double vHat = v[i] / c2;
      t.v[i] -= cfg_.lr * mHat / (std::sqrt(vHat) + cfg_.epsilon);
    }
  }
}

}  // namespace snaphdr::autonet
