#pragma once

#include <vector>

#include "snaphdr/mosaic.hpp"
#include "snaphdr/plane.hpp"

namespace snaphdr {

/// ME-CFA data simulation settings. Exposure scales are the radiometric
/// factors applied to the normalized HDR image before clipping; they double
/// as the attenuation factors used for irradiance conversion.
struct SimConfig {
  std::vector<double> exposureScales{1.0, 4.0, 16.0};
  int bitDepth = 8;
  MosaicPattern pattern = MosaicPattern::bayer_default();

  void validate() const;
};

/// Divides by the global max over all pixels and channels. Throws on
/// all-zero input.
Plane normalize_hdr(const Plane& hdr);

/// q = round(clip(scale*E, 0, 1) * (2^b - 1)) / (2^b - 1), round half up.
double expose_value(double e, double scale, int bitDepth);
Plane expose(const Plane& hdrNorm, double scale, int bitDepth);

/// Samples one-channel RAW data from an LDR exposure stack per the pattern:
/// raw(i) = ldrStack[exposure(i)][color(i)](i).
Plane mosaic_sample(const std::vector<Plane>& ldrStack, const MosaicPattern& pattern);

struct MecfaData {
  Plane raw;                   // H x W x 1
  std::vector<Plane> ldrStack; // one 3-channel LDR image per exposure scale
  Plane hdrNorm;               // ground-truth E in [0, 1]
};

MecfaData simulate_mecfa(const Plane& hdr, const SimConfig& cfg);

}  // namespace snaphdr
