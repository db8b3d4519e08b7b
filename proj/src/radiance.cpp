#include "snaphdr/radiance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snaphdr {

namespace {
constexpr int kWeightNodes = 257;  // 256 intervals; 0.5 falls on a node
}

void ExposureSpec::validate() const {
  if (rho.empty()) throw std::invalid_argument("exposure spec: empty rho list");
  double prev = 0.0;
  for (double r : rho) {
    if (r <= prev) throw std::invalid_argument("exposure spec: rho must be strictly increasing and positive");
    prev = r;
  }
  if (deltaT <= 0.0) throw std::invalid_argument("exposure spec: deltaT must be positive");
}

WeightFn WeightFn::hat() {
  std::vector<double> t(kWeightNodes);
  for (int i = 0; i < kWeightNodes; ++i) {
    const double z = static_cast<double>(i) / (kWeightNodes - 1);
    t[i] = std::min(z, 1.0 - z);
  }
  return WeightFn(std::move(t));
}

WeightFn WeightFn::trapezoid(double rampWidth) {
  if (rampWidth <= 0.0 || rampWidth > 0.5)
    throw std::invalid_argument("weight fn: ramp width must be in (0, 0.5]");
  std::vector<double> t(kWeightNodes);
  for (int i = 0; i < kWeightNodes; ++i) {
    const double z = static_cast<double>(i) / (kWeightNodes - 1);
    t[i] = std::clamp(std::min(z, 1.0 - z) / rampWidth, 0.0, 1.0);
  }
  return WeightFn(std::move(t));
}

double WeightFn::operator()(double z) const {
  z = std::clamp(z, 0.0, 1.0);
  const double u = z * (kWeightNodes - 1);
  const int i = std::min(static_cast<int>(u), kWeightNodes - 2);
  const double f = u - i;
  return table_[i] + f * (table_[i + 1] - table_[i]);
}

double to_irradiance(double x, double rho, double deltaT) {
  if (rho <= 0.0 || deltaT <= 0.0)
    throw std::invalid_argument("to_irradiance: rho and deltaT must be positive");
  return x / (rho * deltaT);
}

Plane to_irradiance(const Plane& x, double rho, double deltaT) {
  if (rho <= 0.0 || deltaT <= 0.0)
    throw std::invalid_argument("to_irradiance: rho and deltaT must be positive");
  Plane out = x;
  const double inv = 1.0 / (rho * deltaT);
  for (double& v : out.data) v *= inv;
  return out;
}

OuThresholds ou_thresholds(double rho, double deltaT) {
  return {0.995 / (rho * deltaT), 0.005 / (rho * deltaT)};
}

IrradianceStack to_irradiance_stack(const SparseStack& x, const MosaicPattern& pattern,
                                    const ExposureSpec& spec) {
  spec.validate();
  const int K = static_cast<int>(spec.rho.size());
  if (pattern.num_exposures() > K)
    throw std::invalid_argument("to_irradiance_stack: pattern exposure index out of range");
  IrradianceStack out{x, pattern, {}};
  out.levels.resize(K);
  const Plane& src = x.planes;
  for (int c = 0; c < 16; ++c) {
    const double inv = 1.0 / (spec.rho[pattern.cell[c].exposure] * spec.deltaT);
    for (int y = 0; y < src.height; ++y)
      for (int xx = 0; xx < src.width; ++xx) out.stack.planes.at(y, xx, c) = src.at(y, xx, c) * inv;
  }
  return out;
}

namespace {

// Channels of the stack holding the given (color, exposure) pair.
std::vector<int> channels_for(const MosaicPattern& p, int color, int exposure) {
  std::vector<int> out;
  for (int c = 0; c < 16; ++c)
    if (p.cell[c].color == color && p.cell[c].exposure == exposure) out.push_back(c);
  return out;
}

// Dense interpolation of one (color, exposure) component; multiple pattern
// cells of the same pair are interpolated independently and averaged.
Plane donor_dense(const SparseStack& s, const MosaicPattern& p, int color, int exposure) {
  const std::vector<int> chans = channels_for(p, color, exposure);
  if (chans.empty())
    throw std::invalid_argument("ou_correct: exposure level has no samples of required color");
  Plane acc(s.planes.height, s.planes.width, 1);
  for (int c : chans) {
    Plane one(s.planes.height, s.planes.width, 1);
    Plane oneMask(s.planes.height, s.planes.width, 1);
    for (int y = 0; y < one.height; ++y)
      for (int x = 0; x < one.width; ++x) {
        one.at(y, x) = s.planes.at(y, x, c);
        oneMask.at(y, x) = s.mask.at(y, x, c);
      }
    Plane dense = interp_sparse(one, oneMask);
    for (std::size_t i = 0; i < acc.data.size(); ++i) acc.data[i] += dense.data[i];
  }
  const double inv = 1.0 / static_cast<double>(chans.size());
  for (double& v : acc.data) v *= inv;
  return acc;
}

}  // namespace

IrradianceStack ou_correct(const IrradianceStack& in, const ExposureSpec& spec) {
  spec.validate();
  const int K = static_cast<int>(spec.rho.size());
  IrradianceStack out = in;
  out.levels.assign(K, {});
  const int H = out.stack.planes.height, W = out.stack.planes.width;

  for (int k = 0; k < K; ++k)
    if (channels_for(in.pattern, kRed, k).empty() && channels_for(in.pattern, kGreen, k).empty() &&
        channels_for(in.pattern, kBlue, k).empty() && k < in.pattern.num_exposures())
      throw std::invalid_argument("ou_correct: exposure level with empty sample set");

  auto correct_pass = [&](bool over) {
    for (int step = 0; step < K; ++step) {
      const int k = over ? step : K - 1 - step;
      const double tau = over ? ou_thresholds(spec.rho[k], spec.deltaT).tauO
                              : ou_thresholds(spec.rho[k], spec.deltaT).tauU;
      const int donorExp = over ? k - 1 : k + 1;
      const bool hasDonor = donorExp >= 0 && donorExp < in.pattern.num_exposures();
      for (int color = 0; color < 3; ++color) {
        const std::vector<int> chans = channels_for(in.pattern, color, k);
        if (chans.empty()) continue;
        Plane donor;
        bool donorReady = false;
        for (int c : chans) {
          for (int y = 0; y < H; ++y) {
            for (int x = 0; x < W; ++x) {
              if (out.stack.mask.at(y, x, c) == 0.0) continue;
              double& v = out.stack.planes.at(y, x, c);
              const bool bad = over ? (v > tau) : (v < tau);
              if (!bad) continue;
              if (hasDonor) {
                if (!donorReady) {
                  donor = donor_dense(out.stack, in.pattern, color, donorExp);
                  donorReady = true;
                }
                v = donor.at(y, x);
              } else {
                v = tau;
                if (over)
                  ++out.levels[k].clampedOver;
                else
                  ++out.levels[k].clampedUnder;
              }
            }
          }
        }
      }
      out.levels[k].corrected = true;
    }
  };

  correct_pass(/*over=*/true);
  correct_pass(/*over=*/false);
  return out;
}

Plane debevec_merge(const std::vector<Plane>& ldrStack, const ExposureSpec& spec,
                    const WeightFn& w) {
  spec.validate();
  const int K = static_cast<int>(ldrStack.size());
  if (K < 2) throw std::invalid_argument("debevec_merge: need at least two exposures");
  if (static_cast<int>(spec.rho.size()) < K)
    throw std::invalid_argument("debevec_merge: rho list shorter than stack");
  const Plane& first = ldrStack.front();
  for (const Plane& p : ldrStack)
    if (!p.same_shape(first)) throw std::invalid_argument("debevec_merge: shape mismatch");

  Plane out(first.height, first.width, first.channels);
  parallel_for(first.height, [&](std::int64_t y) {
    for (int x = 0; x < first.width; ++x) {
      for (int c = 0; c < first.channels; ++c) {
        double num = 0.0, den = 0.0;
        for (int k = 0; k < K; ++k) {
          const double z = ldrStack[k].at(static_cast<int>(y), x, c);
          const double wk = w(z);
          num += wk * (z / (spec.rho[k] * spec.deltaT));
          den += wk;
        }
        if (den > 0.0) {
          out.at(static_cast<int>(y), x, c) = num / den;
        } else {
          // every exposure clipped: use the one farthest from both clip ends
          int best = 0;
          double bestDist = -1e300;
          for (int k = 0; k < K; ++k) {
            const double z = ldrStack[k].at(static_cast<int>(y), x, c);
            const double dist = std::min(z, 1.0 - z);
            if (dist > bestDist) {
              bestDist = dist;
              best = k;
            }
          }
          const double z = ldrStack[best].at(static_cast<int>(y), x, c);
          out.at(static_cast<int>(y), x, c) = z / (spec.rho[best] * spec.deltaT);
        }
      }
    }
  });
  return out;
}

Plane tentative_luminance(const Plane& hdr) {
  Plane out(hdr.height, hdr.width, 1);
  for (int y = 0; y < hdr.height; ++y) {
    for (int x = 0; x < hdr.width; ++x) {
      double m = hdr.at(y, x, 0);
      for (int c = 1; c < hdr.channels; ++c) m = std::max(m, hdr.at(y, x, c));
      out.at(y, x) = m;
    }
  }
  return out;
}

}  // namespace snaphdr
