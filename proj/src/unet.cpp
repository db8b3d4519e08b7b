#include "snaphdr/unet.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace snaphdr::autonet {

void UNetConfig::validate() const {
  if (depth < 1) throw std::invalid_argument("unet: depth must be >= 1");
  if (baseChannels < 1) throw std::invalid_argument("unet: baseChannels must be >= 1");
  if (sparseInChannels < 1 || denseInChannels < 1 || outChannels < 1)
    throw std::invalid_argument("unet: channel counts must be positive");
  if (kernelSize % 2 == 0 || sparseAdaptKernel % 2 == 0 || denseAdaptKernel % 2 == 0)
    throw std::invalid_argument("unet: kernel sizes must be odd");
}

Conv2d::Conv2d(int inCh, int outCh, int kernel)
    : w(outCh, inCh, kernel, kernel), b(outCh, 1, 1, 1) {}

void Conv2d::init(Rng& rng) {
  const double fanIn = static_cast<double>(w.c) * w.h * w.w;
  const double bound = std::sqrt(6.0 / fanIn);
  for (double& x : w.v) x = rng.uniform(-bound, bound);
  for (double& x : b.v) x = 0.0;
}

const Tensor& Conv2d::forward(const Tensor& x) {
  in_ = x;
  out_ = conv2d_forward(x, w, b);
  return out_;
}

Tensor Conv2d::backward(const Tensor& gradOut, bool wantGradIn) {
  ConvGrads g = conv2d_backward(gradOut, in_, w, wantGradIn);
  if (!w.has_grad()) w.zero_grad();
  if (!b.has_grad()) b.zero_grad();
  for (std::size_t i = 0; i < w.g.size(); ++i) w.g[i] += g.gradW.v[i];
  for (std::size_t i = 0; i < b.g.size(); ++i) b.g[i] += g.gradB.v[i];
  return std::move(g.gradIn);
}

namespace {
int width_at(const UNetConfig& cfg, int level) { return cfg.baseChannels << level; }
}  // namespace

UNet::UNet(const UNetConfig& cfg)
    : cfg_(cfg),
      adaptSparse_(cfg.sparseInChannels, cfg.baseChannels, cfg.sparseAdaptKernel),
      adaptDense_(cfg.denseInChannels, cfg.baseChannels, cfg.denseAdaptKernel),
      bottleneck_{Conv2d(cfg.depth == 1 ? 2 * cfg.baseChannels : width_at(cfg, cfg.depth - 2),
                         width_at(cfg, cfg.depth - 1), cfg.kernelSize),
                  Conv2d(width_at(cfg, cfg.depth - 1), width_at(cfg, cfg.depth - 1),
                         cfg.kernelSize)},
      outConv_(cfg.baseChannels, cfg.outChannels, 1) {
  cfg_.validate();
  for (int i = 0; i + 1 < cfg.depth; ++i) {
    const int inCh = i == 0 ? 2 * cfg.baseChannels : width_at(cfg, i - 1);
    enc_.push_back({Conv2d(inCh, width_at(cfg, i), cfg.kernelSize),
                    Conv2d(width_at(cfg, i), width_at(cfg, i), cfg.kernelSize)});
    dec_.push_back({Conv2d(width_at(cfg, i + 1) + width_at(cfg, i), width_at(cfg, i),
                           cfg.kernelSize),
                    Conv2d(width_at(cfg, i), width_at(cfg, i), cfg.kernelSize)});
  }
  encOut_.resize(enc_.size());
  pools_.resize(enc_.size());
  decOut_.resize(dec_.size());
  upOut_.resize(dec_.size());
}

void UNet::init(std::uint64_t seed) {
  Rng rng(seed);
  for (NamedTensor& p : params()) {
    if (p.name.ends_with(".w")) {
      const Tensor& shape = *p.tensor;
      const double fanIn = static_cast<double>(shape.c) * shape.h * shape.w;
      const double bound = std::sqrt(6.0 / fanIn);
      for (double& x : p.tensor->v) x = rng.uniform(-bound, bound);
    } else {
      for (double& x : p.tensor->v) x = 0.0;
    }
  }
}

std::vector<NamedTensor> UNet::params() {
  std::vector<NamedTensor> out;
  auto add = [&out](const std::string& name, Conv2d& conv) {
    out.push_back({name + ".w", &conv.w});
    out.push_back({name + ".b", &conv.b});
  };
  add("adapt.sparse", adaptSparse_);
  add("adapt.dense", adaptDense_);
  for (std::size_t i = 0; i < enc_.size(); ++i) {
    add("enc" + std::to_string(i) + ".conv1", enc_[i].c1);
    add("enc" + std::to_string(i) + ".conv2", enc_[i].c2);
  }
  add("bottleneck.conv1", bottleneck_.c1);
  add("bottleneck.conv2", bottleneck_.c2);
  for (std::size_t i = 0; i < dec_.size(); ++i) {
    add("dec" + std::to_string(i) + ".conv1", dec_[i].c1);
    add("dec" + std::to_string(i) + ".conv2", dec_[i].c2);
  }
  add("out", outConv_);
  return out;
}

void UNet::zero_grad() {
  for (NamedTensor& p : params()) p.tensor->zero_grad();
}

std::size_t UNet::param_count() {
  std::size_t n = 0;
  for (NamedTensor& p : params()) n += p.tensor->numel();
  return n;
}

const Tensor& UNet::forward(const Tensor& sparseIn, const Tensor& denseIn) {
  if (sparseIn.n != denseIn.n || sparseIn.h != denseIn.h || sparseIn.w != denseIn.w)
    throw std::invalid_argument("unet: branch shapes misaligned");
  const int div = 1 << (cfg_.depth - 1);
  if (sparseIn.h % div != 0 || sparseIn.w % div != 0)
    throw std::invalid_argument("unet: spatial dims must be divisible by 2^(depth-1)");

  adaptSparseOut_ = relu_forward(adaptSparse_.forward(sparseIn));
  adaptDenseOut_ = relu_forward(adaptDense_.forward(denseIn));
  Tensor t = concat_forward(adaptSparseOut_, adaptDenseOut_);

  for (std::size_t i = 0; i < enc_.size(); ++i) {
    Level& L = enc_[i];
    encOut_[i] = relu_forward(L.c2.forward(relu_forward(L.c1.forward(t))));
    pools_[i] = maxpool2_forward(encOut_[i]);
    t = pools_[i].out;
  }

  bottleneckOut_ = relu_forward(bottleneck_.c2.forward(relu_forward(bottleneck_.c1.forward(t))));
  t = bottleneckOut_;

  for (int i = static_cast<int>(dec_.size()) - 1; i >= 0; --i) {
    upOut_[i] = upsample2_forward(t, cfg_.upsample);
    Tensor cat = concat_forward(upOut_[i], encOut_[i]);
    Level& L = dec_[i];
    decOut_[i] = relu_forward(L.c2.forward(relu_forward(L.c1.forward(cat))));
    t = decOut_[i];
  }

  out_ = outConv_.forward(t);
  return out_;
}

namespace {

// Backward through a conv-relu-conv-relu block. The inner ReLU mask comes
// from c2's saved input (the post-ReLU output of c1), the outer one from the
// block output a2.
Tensor block_backward(UNet::Level& L, const Tensor& a2, const Tensor& gradOut, bool wantGradIn) {
  Tensor g = relu_backward(gradOut, a2);
  g = L.c2.backward(g, true);
  g = relu_backward(g, L.c2.saved_input());
  return L.c1.backward(g, wantGradIn);
}

}  // namespace

void UNet::backward(const Tensor& gradOut, Tensor* gradSparse, Tensor* gradDense) {
  Tensor g = outConv_.backward(gradOut, true);

  std::vector<Tensor> skipGrad(enc_.size());
  for (std::size_t i = 0; i < dec_.size(); ++i) {
    Tensor gCat = block_backward(dec_[i], decOut_[i], g, true);
    Tensor gUp;
    concat_backward(gCat, upOut_[i].c, gUp, skipGrad[i]);
    g = upsample2_backward(gUp, cfg_.upsample, upOut_[i].h / 2, upOut_[i].w / 2);
  }

  g = block_backward(bottleneck_, bottleneckOut_, g, true);

  for (int i = static_cast<int>(enc_.size()) - 1; i >= 0; --i) {
    Tensor gPool = maxpool2_backward(g, pools_[i], encOut_[i].h, encOut_[i].w);
    for (std::size_t j = 0; j < gPool.v.size(); ++j) gPool.v[j] += skipGrad[i].v[j];
    g = block_backward(enc_[i], encOut_[i], gPool, true);
  }

  const bool wantInput = gradSparse != nullptr || gradDense != nullptr;
  Tensor gS, gD;
  concat_backward(g, adaptSparseOut_.c, gS, gD);
  gS = relu_backward(gS, adaptSparseOut_);
  gD = relu_backward(gD, adaptDenseOut_);
  Tensor inS = adaptSparse_.backward(gS, wantInput);
  Tensor inD = adaptDense_.backward(gD, wantInput);
  if (gradSparse) *gradSparse = std::move(inS);
  if (gradDense) *gradDense = std::move(inD);
}

}  // namespace snaphdr::autonet
