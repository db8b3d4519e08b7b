#pragma once

#include "snaphdr/tensor.hpp"

namespace snaphdr::autonet {

struct LossResult {
  double value = 0.0;
  Tensor grad;  // d value / d pred
};

/// ||pred - target||^2 + lambda * ||grad(pred) - grad(target)||^2 summed over
/// channels and pixels (forward-difference image gradients, trailing
/// row/column zero), averaged over batch elements.
LossResult loss_ldr(const Tensor& pred, const Tensor& target, double lambda);

/// Same functional form in the luminance-normalized HDR domain; the target
/// must already be divided by the tentative luminance.
LossResult loss_ln(const Tensor& pred, const Tensor& target, double lambda);

/// Ablation variant: the loss is evaluated in the linear HDR domain on
/// lum * pred against the unnormalized target, with gradients chained back
/// to pred. lum is single-channel and broadcasts over channels.
LossResult loss_linear_hdr(const Tensor& pred, const Tensor& lum, const Tensor& target,
                           double lambda);

}  // namespace snaphdr::autonet
