#include "snaphdr/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "snaphdr/optim.hpp"

namespace snaphdr::pipeline {

using autonet::Tensor;
using autonet::UNet;
using autonet::UNetConfig;

Dataset make_dataset(const std::vector<Plane>& hdrs, const SimConfig& cfg) {
  if (hdrs.empty()) throw std::invalid_argument("dataset: no images");
  cfg.validate();
  Dataset ds;
  ds.sim = cfg;
  ds.spec.rho = cfg.exposureScales;
  ds.spec.deltaT = 1.0;
  ds.scenes.reserve(hdrs.size());
  for (const Plane& hdr : hdrs) {
    MecfaData sim = simulate_mecfa(hdr, cfg);
    ds.scenes.push_back({std::move(sim.hdrNorm), std::move(sim.ldrStack)});
  }
  return ds;
}

Patch sample_patch(const Dataset& ds, Rng& rng, int patchSize, bool augment) {
  if (ds.scenes.empty()) throw std::invalid_argument("sample_patch: empty dataset");
  const Scene& sc = ds.scenes[rng.uniform_int(static_cast<std::int64_t>(ds.scenes.size()))];
  const int H = sc.hdrNorm.height, W = sc.hdrNorm.width;
  if (patchSize > H || patchSize > W)
    throw std::invalid_argument("sample_patch: patch larger than images");
  // 4-aligned corners keep the mosaic phase canonical
  const int y0 = 4 * static_cast<int>(rng.uniform_int((H - patchSize) / 4 + 1));
  const int x0 = 4 * static_cast<int>(rng.uniform_int((W - patchSize) / 4 + 1));

  Patch p;
  p.hdr = crop(sc.hdrNorm, y0, x0, patchSize, patchSize);
  p.ldr.reserve(sc.ldr.size());
  for (const Plane& z : sc.ldr) p.ldr.push_back(crop(z, y0, x0, patchSize, patchSize));

  if (augment) {
    const bool fh = rng.bernoulli();
    const bool fv = rng.bernoulli();
    const bool tr = rng.bernoulli();
    auto apply = [&](Plane& pl) {
      if (fh) pl = snaphdr::augment(pl, Transform::FlipH);
      if (fv) pl = snaphdr::augment(pl, Transform::FlipV);
      if (tr) pl = snaphdr::augment(pl, Transform::Transpose);
    };
    apply(p.hdr);
    for (Plane& z : p.ldr) apply(z);
  }
  return p;
}

void set_tensor_slice(Tensor& t, int n, int cOffset, const Plane& p) {
  if (p.height != t.h || p.width != t.w || cOffset + p.channels > t.c)
    throw std::invalid_argument("set_tensor_slice: shape mismatch");
  for (int c = 0; c < p.channels; ++c)
    for (int y = 0; y < p.height; ++y)
      for (int x = 0; x < p.width; ++x) t.at(n, cOffset + c, y, x) = p.at(y, x, c);
}

Plane plane_from_tensor(const Tensor& t, int n, int c0, int cCount) {
  if (c0 + cCount > t.c) throw std::invalid_argument("plane_from_tensor: channel range");
  Plane p(t.h, t.w, cCount);
  for (int c = 0; c < cCount; ++c)
    for (int y = 0; y < t.h; ++y)
      for (int x = 0; x < t.w; ++x) p.at(y, x, c) = t.at(n, c0 + c, y, x);
  return p;
}

namespace {

Plane divide_by_luminance(const Plane& p, const Plane& lum) {
  Plane out = p;
  for (int y = 0; y < p.height; ++y)
    for (int x = 0; x < p.width; ++x) {
      const double inv = 1.0 / lum.at(y, x);
      for (int c = 0; c < p.channels; ++c) out.at(y, x, c) *= inv;
    }
  return out;
}

// Mirror padding on the bottom/right so the top-left mosaic phase is kept.
Tensor pad_mirror(const Tensor& t, int H2, int W2) {
  if (H2 == t.h && W2 == t.w) return t;
  Tensor out(t.n, t.c, H2, W2);
  for (int n = 0; n < t.n; ++n)
    for (int c = 0; c < t.c; ++c)
      for (int y = 0; y < H2; ++y) {
        const int sy = y < t.h ? y : std::max(0, 2 * t.h - 1 - y);
        for (int x = 0; x < W2; ++x) {
          const int sx = x < t.w ? x : std::max(0, 2 * t.w - 1 - x);
          out.at(n, c, y, x) = t.at(n, c, sy, sx);
        }
      }
  return out;
}

int round_up(int v, int multiple) { return (v + multiple - 1) / multiple * multiple; }

struct LdrNetInputs {
  Tensor sparse, dense;
};

// y = [x; h(x)] for one RAW image, as 1-batch tensors. The sub-mosaic layout
// is positional, so no pattern is needed here.
LdrNetInputs ldr_inputs(const Plane& raw) {
  SparseStack x = submosaic(raw, MosaicPattern::bayer_default());
  Plane hx = interp_sparse(x.planes, x.mask);
  LdrNetInputs in;
  in.sparse.resize(1, 16, raw.height, raw.width);
  in.dense.resize(1, 16, raw.height, raw.width);
  set_tensor_slice(in.sparse, 0, 0, x.planes);
  set_tensor_slice(in.dense, 0, 0, hx);
  return in;
}

constexpr std::uint64_t kSamplerSeedSalt = 0x9e3779b97f4a7c15ULL;

}  // namespace

LnInput build_ln_input(const Plane& raw, const MosaicPattern& pattern, const ExposureSpec& spec,
                       const Plane& lum) {
  if (lum.channels != 1 || lum.height != raw.height || lum.width != raw.width)
    throw std::invalid_argument("build_ln_input: luminance shape mismatch");
  for (double v : lum.data)
    if (!(v > 0.0)) throw std::invalid_argument("build_ln_input: luminance must be positive");

  LnInput out;
  SparseStack x = submosaic(raw, pattern);
  out.hx = interp_sparse(x.planes, x.mask);
  IrradianceStack irr = ou_correct(to_irradiance_stack(x, pattern, spec), spec);
  Plane hIrr = interp_sparse(irr.stack.planes, irr.stack.mask);
  out.irr = divide_by_luminance(irr.stack.planes, lum);
  out.hirr = divide_by_luminance(hIrr, lum);
  out.x = std::move(x.planes);
  return out;
}

namespace {

void check_train_inputs(const Dataset& ds, const TrainConfig& tc, const UNetConfig& uc) {
  if (ds.scenes.empty()) throw std::invalid_argument("train: empty dataset");
  if (tc.patchSize <= 0 || tc.batchSize <= 0 || tc.iterations <= 0)
    throw std::invalid_argument("train: counts must be positive");
  const int div = 1 << (uc.depth - 1);
  if (tc.patchSize % div != 0 || tc.patchSize % 4 != 0)
    throw std::invalid_argument("train: patch size must be divisible by 4 and 2^(depth-1)");
}

}  // namespace

TrainOutput train_ldr_i_net(const Dataset& ds, const TrainConfig& tc, const UNetConfig& uc) {
  check_train_inputs(ds, tc, uc);
  const int K = static_cast<int>(ds.sim.exposureScales.size());
  UNetConfig cfg = uc;
  cfg.sparseInChannels = 16;
  cfg.denseInChannels = 16;
  cfg.outChannels = 3 * K;

  TrainOutput out{UNet(cfg), {}};
  out.net.init(tc.seed);
  out.lossTrace.reserve(tc.iterations);

  autonet::AdamState adam(out.net.params(), {tc.lr, tc.beta1, tc.beta2, 1e-8});
  Rng sampler(tc.seed + kSamplerSeedSalt);

  const int B = tc.batchSize, P = tc.patchSize;
  Tensor sparse(B, 16, P, P), dense(B, 16, P, P), target(B, 3 * K, P, P);
  std::vector<Patch> patches(B);
  for (int it = 0; it < tc.iterations; ++it) {
    // sampling consumes the RNG sequentially; the heavy prep is per-element
    for (int b = 0; b < B; ++b) patches[b] = sample_patch(ds, sampler, P, tc.augment);
    parallel_for(B, [&](std::int64_t b) {
      const Plane raw = mosaic_sample(patches[b].ldr, ds.sim.pattern);
      SparseStack x = submosaic(raw, ds.sim.pattern);
      set_tensor_slice(sparse, static_cast<int>(b), 0, x.planes);
      set_tensor_slice(dense, static_cast<int>(b), 0, interp_sparse(x.planes, x.mask));
      for (int k = 0; k < K; ++k)
        set_tensor_slice(target, static_cast<int>(b), 3 * k, patches[b].ldr[k]);
    });
    const Tensor& pred = out.net.forward(sparse, dense);
    autonet::LossResult loss = autonet::loss_ldr(pred, target, tc.lambdaLdr);
    out.net.zero_grad();
    out.net.backward(loss.grad);
    adam.step(out.net.params());
    out.lossTrace.push_back(loss.value);
  }
  return out;
}

TrainOutput train_ln_net(const Dataset& ds, UNet& ldrNet, const TrainConfig& tc,
                         const UNetConfig& uc, const WeightFn& w) {
  check_train_inputs(ds, tc, uc);
  const int ldrDiv = 1 << (ldrNet.config().depth - 1);
  if (tc.patchSize % ldrDiv != 0)
    throw std::invalid_argument("train: patch size incompatible with stage-1 network depth");
  const int K = static_cast<int>(ds.sim.exposureScales.size());
  UNetConfig cfg = uc;
  cfg.sparseInChannels = 32;
  cfg.denseInChannels = 32;
  cfg.outChannels = 3;

  TrainOutput out{UNet(cfg), {}};
  out.net.init(tc.seed);
  out.lossTrace.reserve(tc.iterations);

  autonet::AdamState adam(out.net.params(), {tc.lr, tc.beta1, tc.beta2, 1e-8});
  Rng sampler(tc.seed + kSamplerSeedSalt);

  const int B = tc.batchSize, P = tc.patchSize;
  Tensor ldrSparse(B, 16, P, P), ldrDense(B, 16, P, P);
  Tensor lnSparse(B, 32, P, P), lnDense(B, 32, P, P);
  Tensor target(B, 3, P, P), lumT(B, 1, P, P);
  std::vector<Patch> patches(B);
  std::vector<Plane> raws(B);

  for (int it = 0; it < tc.iterations; ++it) {
    for (int b = 0; b < B; ++b) patches[b] = sample_patch(ds, sampler, P, tc.augment);
    parallel_for(B, [&](std::int64_t b) {
      raws[b] = mosaic_sample(patches[b].ldr, ds.sim.pattern);
      SparseStack x = submosaic(raws[b], ds.sim.pattern);
      set_tensor_slice(ldrSparse, static_cast<int>(b), 0, x.planes);
      set_tensor_slice(ldrDense, static_cast<int>(b), 0, interp_sparse(x.planes, x.mask));
    });
    // frozen stage-1 pass for the tentative luminance
    const Tensor& ldrPredT = ldrNet.forward(ldrSparse, ldrDense);
    parallel_for(B, [&](std::int64_t b64) {
      const int b = static_cast<int>(b64);
      std::vector<Plane> ldrPred;
      ldrPred.reserve(K);
      for (int k = 0; k < K; ++k) ldrPred.push_back(plane_from_tensor(ldrPredT, b, 3 * k, 3));
      Plane lum = tentative_luminance(debevec_merge(ldrPred, ds.spec, w));
      for (double& v : lum.data) v = std::max(v, tc.epsilonL);

      LnInput li = build_ln_input(raws[b], ds.sim.pattern, ds.spec, lum);
      set_tensor_slice(lnSparse, b, 0, li.x);
      set_tensor_slice(lnSparse, b, 16, li.irr);
      set_tensor_slice(lnDense, b, 0, li.hx);
      set_tensor_slice(lnDense, b, 16, li.hirr);

      if (tc.lossDomain == TrainConfig::LossDomain::LuminanceNormalized) {
        set_tensor_slice(target, b, 0, divide_by_luminance(patches[b].hdr, lum));
      } else {
        set_tensor_slice(target, b, 0, patches[b].hdr);
        set_tensor_slice(lumT, b, 0, lum);
      }
    });
    const Tensor& pred = out.net.forward(lnSparse, lnDense);
    autonet::LossResult loss =
        tc.lossDomain == TrainConfig::LossDomain::LuminanceNormalized
            ? autonet::loss_ln(pred, target, tc.lambdaLn)
            : autonet::loss_linear_hdr(pred, lumT, target, tc.lambdaLn);
    out.net.zero_grad();
    out.net.backward(loss.grad);
    adam.step(out.net.params());
    out.lossTrace.push_back(loss.value);
  }
  return out;
}

LuminanceEstimate estimate_luminance(const Plane& raw, UNet& ldrNet, const ExposureSpec& spec,
                                     const WeightFn& w, double epsilonL) {
  const int div = 1 << (ldrNet.config().depth - 1);
  const int H2 = round_up(raw.height, div), W2 = round_up(raw.width, div);

  LdrNetInputs in = ldr_inputs(raw);
  const Tensor& predT = ldrNet.forward(pad_mirror(in.sparse, H2, W2), pad_mirror(in.dense, H2, W2));

  const int K = predT.c / 3;
  if (static_cast<int>(spec.rho.size()) < K)
    throw std::invalid_argument("estimate_luminance: rho list shorter than network exposures");
  LuminanceEstimate est;
  est.ldrPred.reserve(K);
  for (int k = 0; k < K; ++k) {
    Plane full = plane_from_tensor(predT, 0, 3 * k, 3);
    est.ldrPred.push_back(crop(full, 0, 0, raw.height, raw.width));
  }
  est.lum = tentative_luminance(debevec_merge(est.ldrPred, spec, w));
  for (double& v : est.lum.data) v = std::max(v, epsilonL);
  return est;
}

Plane reconstruct(const Plane& raw, UNet& ldrNet, UNet& lnNet, const MosaicPattern& pattern,
                  const ExposureSpec& spec, const WeightFn& w, double epsilonL) {
  LuminanceEstimate est = estimate_luminance(raw, ldrNet, spec, w, epsilonL);
  LnInput li = build_ln_input(raw, pattern, spec, est.lum);

  Tensor sparse(1, 32, raw.height, raw.width), dense(1, 32, raw.height, raw.width);
  set_tensor_slice(sparse, 0, 0, li.x);
  set_tensor_slice(sparse, 0, 16, li.irr);
  set_tensor_slice(dense, 0, 0, li.hx);
  set_tensor_slice(dense, 0, 16, li.hirr);

  const int div = 1 << (lnNet.config().depth - 1);
  const int H2 = round_up(raw.height, div), W2 = round_up(raw.width, div);
  const Tensor& gT = lnNet.forward(pad_mirror(sparse, H2, W2), pad_mirror(dense, H2, W2));
  Plane g = crop(plane_from_tensor(gT, 0, 0, 3), 0, 0, raw.height, raw.width);

  Plane out(raw.height, raw.width, 3);
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x)
      for (int c = 0; c < 3; ++c)
        out.at(y, x, c) = std::max(0.0, est.lum.at(y, x) * g.at(y, x, c));
  return out;
}

Plane interp_debevec_baseline(const Plane& raw, const MosaicPattern& pattern,
                              const ExposureSpec& spec, const WeightFn& w) {
  SparseStack x = submosaic(raw, pattern);
  Plane hx = interp_sparse(x.planes, x.mask);
  const int K = pattern.num_exposures();
  std::vector<Plane> ldr;
  ldr.reserve(K);
  for (int k = 0; k < K; ++k) {
    Plane z(raw.height, raw.width, 3);
    for (int color = 0; color < 3; ++color) {
      std::vector<int> chans;
      for (int c = 0; c < 16; ++c)
        if (pattern.cell[c].color == color && pattern.cell[c].exposure == k) chans.push_back(c);
      if (chans.empty())
        throw std::invalid_argument("baseline: pattern lacks a color at some exposure");
      for (int yy = 0; yy < raw.height; ++yy)
        for (int xx = 0; xx < raw.width; ++xx) {
          double acc = 0.0;
          for (int c : chans) acc += hx.at(yy, xx, c);
          z.at(yy, xx, color) = acc / static_cast<double>(chans.size());
        }
    }
    ldr.push_back(std::move(z));
  }
  return debevec_merge(ldr, spec, w);
}

std::string echo_config(const SimConfig& sim, const TrainConfig& tc, const UNetConfig& uc) {
  KeyVal kv;
  std::ostringstream scales;
  for (std::size_t i = 0; i < sim.exposureScales.size(); ++i) {
    if (i) scales << ",";
    scales << sim.exposureScales[i];
  }
  kv.set("sim.scales", scales.str());
  kv.set("sim.bitDepth", std::to_string(sim.bitDepth));
  std::string pat = sim.pattern.to_string();
  std::replace(pat.begin(), pat.end(), '\n', ' ');
  kv.set("sim.pattern", pat);

  kv.set("train.patchSize", std::to_string(tc.patchSize));
  kv.set("train.batchSize", std::to_string(tc.batchSize));
  kv.set("train.iterations", std::to_string(tc.iterations));
  kv.set("train.lr", std::to_string(tc.lr));
  kv.set("train.beta1", std::to_string(tc.beta1));
  kv.set("train.beta2", std::to_string(tc.beta2));
  kv.set("train.seed", std::to_string(tc.seed));
  kv.set("train.augment", tc.augment ? "1" : "0");
  kv.set("train.epsilonL", std::to_string(tc.epsilonL));
  kv.set("train.lambdaLdr", std::to_string(tc.lambdaLdr));
  kv.set("train.lambdaLn", std::to_string(tc.lambdaLn));
  kv.set("train.lossDomain",
         tc.lossDomain == TrainConfig::LossDomain::LuminanceNormalized ? "ln" : "linear");

  kv.set("unet.depth", std::to_string(uc.depth));
  kv.set("unet.baseChannels", std::to_string(uc.baseChannels));
  kv.set("unet.sparseInChannels", std::to_string(uc.sparseInChannels));
  kv.set("unet.denseInChannels", std::to_string(uc.denseInChannels));
  kv.set("unet.outChannels", std::to_string(uc.outChannels));
  kv.set("unet.kernelSize", std::to_string(uc.kernelSize));
  kv.set("unet.sparseAdaptKernel", std::to_string(uc.sparseAdaptKernel));
  kv.set("unet.denseAdaptKernel", std::to_string(uc.denseAdaptKernel));
  kv.set("unet.upsample", uc.upsample == autonet::UpsampleMode::Nearest ? "nearest" : "bilinear");
  return kv.serialize();
}

UNetConfig unet_from_echo(const KeyVal& kv) {
  UNetConfig uc;
  uc.depth = static_cast<int>(kv.get_int("unet.depth", uc.depth));
  uc.baseChannels = static_cast<int>(kv.get_int("unet.baseChannels", uc.baseChannels));
  uc.sparseInChannels = static_cast<int>(kv.get_int("unet.sparseInChannels", uc.sparseInChannels));
  uc.denseInChannels = static_cast<int>(kv.get_int("unet.denseInChannels", uc.denseInChannels));
  uc.outChannels = static_cast<int>(kv.get_int("unet.outChannels", uc.outChannels));
  uc.kernelSize = static_cast<int>(kv.get_int("unet.kernelSize", uc.kernelSize));
  uc.sparseAdaptKernel =
      static_cast<int>(kv.get_int("unet.sparseAdaptKernel", uc.sparseAdaptKernel));
  uc.denseAdaptKernel = static_cast<int>(kv.get_int("unet.denseAdaptKernel", uc.denseAdaptKernel));
  uc.upsample = kv.get("unet.upsample", "nearest") == "bilinear" ? autonet::UpsampleMode::Bilinear
                                                                 : autonet::UpsampleMode::Nearest;
  uc.validate();
  return uc;
}

SimConfig sim_from_echo(const KeyVal& kv) {
  SimConfig sim;
  if (kv.has("sim.scales")) {
    sim.exposureScales.clear();
    std::istringstream in(kv.get("sim.scales"));
    std::string tok;
    while (std::getline(in, tok, ',')) sim.exposureScales.push_back(std::stod(tok));
  }
  sim.bitDepth = static_cast<int>(kv.get_int("sim.bitDepth", sim.bitDepth));
  if (kv.has("sim.pattern")) sim.pattern = MosaicPattern::parse(kv.get("sim.pattern"));
  sim.validate();
  return sim;
}

TrainConfig train_from_echo(const KeyVal& kv) {
  TrainConfig tc;
  tc.patchSize = static_cast<int>(kv.get_int("train.patchSize", tc.patchSize));
  tc.batchSize = static_cast<int>(kv.get_int("train.batchSize", tc.batchSize));
  tc.iterations = static_cast<int>(kv.get_int("train.iterations", tc.iterations));
  tc.lr = kv.get_double("train.lr", tc.lr);
  tc.beta1 = kv.get_double("train.beta1", tc.beta1);
  tc.beta2 = kv.get_double("train.beta2", tc.beta2);
  tc.seed = static_cast<std::uint64_t>(kv.get_int("train.seed", static_cast<long>(tc.seed)));
  tc.augment = kv.get_int("train.augment", 1) != 0;
  tc.epsilonL = kv.get_double("train.epsilonL", tc.epsilonL);
  tc.lambdaLdr = kv.get_double("train.lambdaLdr", tc.lambdaLdr);
  tc.lambdaLn = kv.get_double("train.lambdaLn", tc.lambdaLn);
  tc.lossDomain = kv.get("train.lossDomain", "ln") == "linear"
                      ? TrainConfig::LossDomain::Linear
                      : TrainConfig::LossDomain::LuminanceNormalized;
  return tc;
}

void write_loss_csv(const std::string& path, const std::vector<double>& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("loss csv: cannot open " + path);
  out << "iteration,loss\n";
  out.precision(17);
  for (std::size_t i = 0; i < trace.size(); ++i) out << i + 1 << "," << trace[i] << "\n";
}

}  // namespace snaphdr::pipeline
