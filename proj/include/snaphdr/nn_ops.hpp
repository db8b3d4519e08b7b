#pragma once

#include <cstdint>
#include <vector>

#include "snaphdr/tensor.hpp"

namespace snaphdr::autonet {

/// Cross-correlation with zero padding k/2, stride 1 ("same"). Weights are
/// (outCh, inCh, k, k), bias (outCh, 1, 1, 1); kernel size must be odd.
Tensor conv2d_forward(const Tensor& x, const Tensor& weights, const Tensor& bias);

struct ConvGrads {
  Tensor gradIn;  // empty unless requested
  Tensor gradW;
  Tensor gradB;
};

/// Exact adjoint of conv2d_forward. gradIn computation can be skipped for
/// leaf layers.
ConvGrads conv2d_backward(const Tensor& gradOut, const Tensor& savedInput,
                          const Tensor& weights, bool wantGradIn = true);

Tensor relu_forward(const Tensor& x);
/// Routes gradients through positive outputs; the subgradient at 0 is 0, so
/// masking on the saved output is equivalent to masking on the input.
Tensor relu_backward(const Tensor& gradOut, const Tensor& savedOutput);

struct Pool2Result {
  Tensor out;
  std::vector<std::uint8_t> argmax;  // 0..3, position within each 2x2 block
};
Pool2Result maxpool2_forward(const Tensor& x);
Tensor maxpool2_backward(const Tensor& gradOut, const Pool2Result& saved, int inH, int inW);

enum class UpsampleMode { Nearest, Bilinear };

/// Factor-2 upsampling. Nearest replicates each pixel into a 2x2 block;
/// bilinear uses the half-pixel-center convention with edge clamping.
Tensor upsample2_forward(const Tensor& x, UpsampleMode mode = UpsampleMode::Nearest);
Tensor upsample2_backward(const Tensor& gradOut, UpsampleMode mode, int inH, int inW);

Tensor concat_forward(const Tensor& a, const Tensor& b);
/// Splits the gradient at channel aChannels.
void concat_backward(const Tensor& gradOut, int aChannels, Tensor& gradA, Tensor& gradB);

}  // namespace snaphdr::autonet
