#include "snaphdr/gradcheck.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snaphdr::autonet {

double grad_check(const std::function<double(bool)>& eval, const std::vector<Tensor*>& inputs,
                  double h) {
  const double base = eval(true);
  if (!std::isfinite(base)) throw std::runtime_error("grad_check: non-finite objective");

  std::vector<std::vector<double>> analytic;
  analytic.reserve(inputs.size());
  for (Tensor* t : inputs) {
    if (!t->has_grad()) throw std::runtime_error("grad_check: missing analytic gradient");
    analytic.push_back(t->g);
  }

  double maxRel = 0.0;
  for (std::size_t ti = 0; ti < inputs.size(); ++ti) {
    Tensor& t = *inputs[ti];
    for (std::size_t i = 0; i < t.v.size(); ++i) {
      const double saved = t.v[i];
      t.v[i] = saved + h;
      const double fPlus = eval(false);
      t.v[i] = saved - h;
      const double fMinus = eval(false);
      t.v[i] = saved;
      if (!std::isfinite(fPlus) || !std::isfinite(fMinus))
        throw std::runtime_error("grad_check: non-finite perturbed objective");
      const double numeric = (fPlus - fMinus) / (2.0 * h);
      const double a = analytic[ti][i];
      const double rel = std::abs(a - numeric) / std::max({std::abs(a), std::abs(numeric), 1e-8});
      maxRel = std::max(maxRel, rel);
    }
  }
  return maxRel;
}

}  // namespace snaphdr::autonet
