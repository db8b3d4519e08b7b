#include "snaphdr/sim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace snaphdr {

void SimConfig::validate() const {
  if (exposureScales.empty()) throw std::invalid_argument("sim: no exposure scales");
  double prev = 0.0;
  for (double s : exposureScales) {
    if (s <= prev) throw std::invalid_argument("sim: exposure scales must be strictly increasing and positive");
    prev = s;
  }
  if (bitDepth < 1 || bitDepth > 16) throw std::invalid_argument("sim: bitDepth must be in [1, 16]");
  if (pattern.num_exposures() > static_cast<int>(exposureScales.size()))
    throw std::invalid_argument("sim: pattern references more exposure levels than scales given");
}

Plane normalize_hdr(const Plane& hdr) {
  double maxVal = 0.0;
  for (double v : hdr.data) maxVal = std::max(maxVal, v);
  if (maxVal <= 0.0) throw std::invalid_argument("normalize_hdr: all-zero image");
  Plane out = hdr;
  for (double& v : out.data) v /= maxVal;
  return out;
}

double expose_value(double e, double scale, int bitDepth) {
  const double levels = static_cast<double>((1 << bitDepth) - 1);
  const double clipped = std::clamp(scale * e, 0.0, 1.0);
  return std::round(clipped * levels) / levels;
}

Plane expose(const Plane& hdrNorm, double scale, int bitDepth) {
  Plane out = hdrNorm;
  const double levels = static_cast<double>((1 << bitDepth) - 1);
  for (double& v : out.data) v = std::round(std::clamp(scale * v, 0.0, 1.0) * levels) / levels;
  return out;
}

Plane mosaic_sample(const std::vector<Plane>& ldrStack, const MosaicPattern& pattern) {
  if (ldrStack.empty()) throw std::invalid_argument("mosaic_sample: empty stack");
  const Plane& first = ldrStack.front();
  Plane raw(first.height, first.width, 1);
  for (int y = 0; y < raw.height; ++y) {
    for (int x = 0; x < raw.width; ++x) {
      const MosaicPattern::Site s = pattern.site_at(y, x);
      raw.at(y, x) = ldrStack[s.exposure].at(y, x, s.color);
    }
  }
  return raw;
}

MecfaData simulate_mecfa(const Plane& hdr, const SimConfig& cfg) {
  cfg.validate();
  if (hdr.channels != 3) throw std::invalid_argument("simulate_mecfa: hdr must have 3 channels");
  if (hdr.height % 4 != 0 || hdr.width % 4 != 0)
    throw std::invalid_argument("simulate_mecfa: dimensions must be multiples of 4");

  MecfaData out;
  out.hdrNorm = normalize_hdr(hdr);
  out.ldrStack.reserve(cfg.exposureScales.size());
  for (double s : cfg.exposureScales) out.ldrStack.push_back(expose(out.hdrNorm, s, cfg.bitDepth));
  out.raw = mosaic_sample(out.ldrStack, cfg.pattern);
  return out;
}

}  // namespace snaphdr
