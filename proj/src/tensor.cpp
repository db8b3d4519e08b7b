#include "snaphdr/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace snaphdr::autonet {

Tensor::Tensor(int n_, int c_, int h_, int w_, double fill)
    : n(n_), c(c_), h(h_), w(w_),
      v(static_cast<std::size_t>(n_) * c_ * h_ * w_, fill) {
  if (n_ < 0 || c_ < 0 || h_ < 0 || w_ < 0)
    throw std::invalid_argument("Tensor: negative dimension");
}

void Tensor::resize(int n_, int c_, int h_, int w_) {
  n = n_;
  c = c_;
  h = h_;
  w = w_;
  v.assign(static_cast<std::size_t>(n_) * c_ * h_ * w_, 0.0);
  g.clear();
}

void Tensor::zero_grad() { g.assign(v.size(), 0.0); }

bool Tensor::all_finite() const {
  for (double x : v)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace snaphdr::autonet
