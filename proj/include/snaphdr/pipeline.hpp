#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "snaphdr/keyval.hpp"
#include "snaphdr/loss.hpp"
#include "snaphdr/radiance.hpp"
#include "snaphdr/rng.hpp"
#include "snaphdr/sim.hpp"
#include "snaphdr/unet.hpp"

namespace snaphdr::pipeline {

struct TrainConfig {
  int patchSize = 32;
  int batchSize = 32;
  int iterations = 3000;
  double lr = 0.001;
  double beta1 = 0.9;
  double beta2 = 0.999;
  std::uint64_t seed = 1;
  bool augment = true;
  double epsilonL = 1e-6;  // lower clamp on the tentative luminance
  double lambdaLdr = 1.0;
  double lambdaLn = 1.0;
  enum class LossDomain { LuminanceNormalized, Linear };
  LossDomain lossDomain = LossDomain::LuminanceNormalized;
};

struct Scene {
  Plane hdrNorm;             // ground-truth E in [0, 1]
  std::vector<Plane> ldr;    // quantized exposures z_k
};

struct Dataset {
  SimConfig sim;
  ExposureSpec spec;         // rho identified with sim.exposureScales
  std::vector<Scene> scenes;
};

/// Simulates every HDR image and keeps the per-scene ground truth. RAW
/// mosaics are regenerated per patch so augmentation keeps the pattern phase
/// canonical.
Dataset make_dataset(const std::vector<Plane>& hdrs, const SimConfig& cfg);

struct Patch {
  std::vector<Plane> ldr;
  Plane hdr;
};

/// Uniform scene choice, 4-aligned top-left corner, then independent
/// flip/flip/transpose draws applied to every plane of the sample.
Patch sample_patch(const Dataset& ds, Rng& rng, int patchSize, bool augment);

/// LN-Net input components (Eq. numbering follows the pipeline docs):
/// LDR-domain x and h(x) plus irradiance-domain xi/L and h(xi)/L. The LDR
/// components are deliberately not normalized.
struct LnInput {
  Plane x;     // 16-channel sparse LDR
  Plane hx;    // dense interpolation of x
  Plane irr;   // O/U-corrected sparse irradiance / luminance
  Plane hirr;  // dense interpolation of the corrected irradiance / luminance
};

LnInput build_ln_input(const Plane& raw, const MosaicPattern& pattern, const ExposureSpec& spec,
                       const Plane& lum);

struct TrainOutput {
  autonet::UNet net;
  std::vector<double> lossTrace;
};

/// Stage 1: trains the LDR interpolation network on (RAW, true LDR stack)
/// patches. Forces sparse/dense input widths to 16 and output channels to
/// 3 * numExposures.
TrainOutput train_ldr_i_net(const Dataset& ds, const TrainConfig& tc,
                            const autonet::UNetConfig& uc);

/// Stage 2: trains the luminance-normalized reconstruction network using the
/// frozen stage-1 network for the tentative luminance. lossDomain selects
/// the paper pipeline (LN) or the linear-domain ablation.
TrainOutput train_ln_net(const Dataset& ds, autonet::UNet& ldrNet, const TrainConfig& tc,
                         const autonet::UNetConfig& uc, const WeightFn& w = WeightFn::hat());

struct LuminanceEstimate {
  Plane lum;                  // clamped below by epsilonL
  std::vector<Plane> ldrPred; // stage-1 LDR predictions
};

LuminanceEstimate estimate_luminance(const Plane& raw, autonet::UNet& ldrNet,
                                     const ExposureSpec& spec, const WeightFn& w,
                                     double epsilonL);

/// Full reconstruction E_hat = L_hat * g(eta). Inputs whose dimensions are
/// not divisible by 2^(depth-1) are mirror-padded and cropped back.
Plane reconstruct(const Plane& raw, autonet::UNet& ldrNet, autonet::UNet& lnNet,
                  const MosaicPattern& pattern, const ExposureSpec& spec, const WeightFn& w,
                  double epsilonL = 1e-6);

/// Training-free reference: per-channel linear interpolation of the
/// sub-mosaicked LDR data assembled into full exposures, then Debevec merge.
Plane interp_debevec_baseline(const Plane& raw, const MosaicPattern& pattern,
                              const ExposureSpec& spec, const WeightFn& w);

// Tensor/Plane bridging used across training and inference.
void set_tensor_slice(autonet::Tensor& t, int n, int cOffset, const Plane& p);
Plane plane_from_tensor(const autonet::Tensor& t, int n, int c0, int cCount);

/// Key=value echo stored in checkpoints so that reconstruction can rebuild
/// the network and radiometric model without external configuration.
std::string echo_config(const SimConfig& sim, const TrainConfig& tc, const autonet::UNetConfig& uc);
autonet::UNetConfig unet_from_echo(const KeyVal& kv);
SimConfig sim_from_echo(const KeyVal& kv);
TrainConfig train_from_echo(const KeyVal& kv);

void write_loss_csv(const std::string& path, const std::vector<double>& trace);

}  // namespace snaphdr::pipeline
