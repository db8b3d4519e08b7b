#pragma once

#include <string>
#include <vector>

#include "snaphdr/nn_ops.hpp"
#include "snaphdr/rng.hpp"
#include "snaphdr/tensor.hpp"

namespace snaphdr::autonet {

struct UNetConfig {
  int depth = 5;           // encoder/decoder levels including the bottleneck
  int baseChannels = 32;   // width at the top level, doubling per level
  int sparseInChannels = 16;
  int denseInChannels = 16;
  int outChannels = 9;
  int kernelSize = 3;
  int sparseAdaptKernel = 7;
  int denseAdaptKernel = 3;
  UpsampleMode upsample = UpsampleMode::Nearest;

  void validate() const;
};

/// Convolution layer owning weights, bias and the saved forward input.
class Conv2d {
 public:
  Conv2d(int inCh, int outCh, int kernel);

  void init(Rng& rng);  // fan-in-scaled uniform weights, zero bias
  const Tensor& forward(const Tensor& x);
  /// Accumulates into w.g / b.g; returns gradient w.r.t. the input (empty
  /// when wantGradIn is false).
  Tensor backward(const Tensor& gradOut, bool wantGradIn = true);
  const Tensor& saved_input() const { return in_; }

  Tensor w, b;

 private:
  Tensor in_, out_;
};

/// Depth-D U-Net with RAW data adaptation blocks: the sparse branch goes
/// through a 7x7 conv + ReLU, the dense branch through a 3x3 conv + ReLU,
/// and the concatenation feeds the encoder. Two 3x3 convs per level, 2x2
/// max pooling down, factor-2 upsampling with skip concatenation up, and a
/// linear 1x1 output conv. Spatial dims must be divisible by 2^(depth-1).
class UNet {
 public:
  struct Level {
    Conv2d c1, c2;
  };

  explicit UNet(const UNetConfig& cfg);

  void init(std::uint64_t seed);
  const UNetConfig& config() const { return cfg_; }

  const Tensor& forward(const Tensor& sparseIn, const Tensor& denseIn);
  /// Backpropagates loss gradients into every parameter's grad buffer.
  /// Input gradients are produced only when requested (gradient checking).
  void backward(const Tensor& gradOut, Tensor* gradSparse = nullptr, Tensor* gradDense = nullptr);

  std::vector<NamedTensor> params();
  void zero_grad();
  std::size_t param_count();

 private:
  UNetConfig cfg_;
  Conv2d adaptSparse_, adaptDense_;
  std::vector<Level> enc_;
  Level bottleneck_;
  std::vector<Level> dec_;  // dec_[i] operates at encoder level i
  Conv2d outConv_;

  // saved activations (post-ReLU) and pooling state per level
  Tensor adaptSparseOut_, adaptDenseOut_;
  std::vector<Tensor> encOut_;       // skip tensors
  std::vector<Pool2Result> pools_;
  Tensor bottleneckOut_;
  std::vector<Tensor> decOut_;
  std::vector<Tensor> upOut_;        // pre-concat upsampled tensors
  Tensor out_;
};

}  // namespace snaphdr::autonet
