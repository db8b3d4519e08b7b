#include "snaphdr/loss.hpp"

#include <stdexcept>

namespace snaphdr::autonet {

namespace {

// Accumulates the squared-norm loss and its gradient for one difference
// tensor d = pred - target:
//   value += sum d^2 + lambda (sum (Dx d)^2 + sum (Dy d)^2)
//   grad  += 2 d + 2 lambda (Dx^T Dx d + Dy^T Dy d)
// Dx/Dy are forward differences with zero trailing column/row.
void accumulate(const Tensor& pred, const Tensor& target, double lambda, double& value,
                Tensor& grad) {
  const int N = pred.n, C = pred.c, H = pred.h, W = pred.w;
  for (int in = 0; in < N; ++in) {
    for (int ic = 0; ic < C; ++ic) {
      for (int y = 0; y < H; ++y) {
        for (int x = 0; x < W; ++x) {
          const std::size_t i = pred.index(in, ic, y, x);
          const double d = pred.v[i] - target.v[i];
          value += d * d;
          grad.v[i] += 2.0 * d;
          if (lambda != 0.0) {
            if (x + 1 < W) {
              const double dx = (pred.v[i + 1] - target.v[i + 1]) - d;
              value += lambda * dx * dx;
              grad.v[i + 1] += 2.0 * lambda * dx;
              grad.v[i] -= 2.0 * lambda * dx;
            }
            if (y + 1 < H) {
              const std::size_t j = i + W;
              const double dy = (pred.v[j] - target.v[j]) - d;
              value += lambda * dy * dy;
              grad.v[j] += 2.0 * lambda * dy;
              grad.v[i] -= 2.0 * lambda * dy;
            }
          }
        }
      }
    }
  }
}

LossResult squared_norm_loss(const Tensor& pred, const Tensor& target, double lambda) {
  if (!pred.same_shape(target)) throw std::invalid_argument("loss: shape mismatch");
  LossResult r;
  r.grad.resize(pred.n, pred.c, pred.h, pred.w);
  accumulate(pred, target, lambda, r.value, r.grad);
  const double invN = 1.0 / static_cast<double>(pred.n);
  r.value *= invN;
  for (double& g : r.grad.v) g *= invN;
  return r;
}

}  // namespace

LossResult loss_ldr(const Tensor& pred, const Tensor& target, double lambda) {
  return squared_norm_loss(pred, target, lambda);
}

LossResult loss_ln(const Tensor& pred, const Tensor& target, double lambda) {
  return squared_norm_loss(pred, target, lambda);
}

LossResult loss_linear_hdr(const Tensor& pred, const Tensor& lum, const Tensor& target,
                           double lambda) {
  if (!pred.same_shape(target)) throw std::invalid_argument("loss: shape mismatch");
  if (lum.n != pred.n || lum.c != 1 || lum.h != pred.h || lum.w != pred.w)
    throw std::invalid_argument("loss: luminance must be single-channel and aligned");
  Tensor scaled = pred;
  for (int in = 0; in < pred.n; ++in)
    for (int ic = 0; ic < pred.c; ++ic)
      for (int y = 0; y < pred.h; ++y)
        for (int x = 0; x < pred.w; ++x)
          scaled.at(in, ic, y, x) *= lum.at(in, 0, y, x);
  LossResult r = squared_norm_loss(scaled, target, lambda);
  for (int in = 0; in < pred.n; ++in)
    for (int ic = 0; ic < pred.c; ++ic)
      for (int y = 0; y < pred.h; ++y)
        for (int x = 0; x < pred.w; ++x)
          r.grad.at(in, ic, y, x) *= lum.at(in, 0, y, x);
  return r;
}

}  // namespace snaphdr::autonet
