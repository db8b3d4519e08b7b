#pragma once

#include <array>
#include <string>

#include "snaphdr/plane.hpp"

namespace snaphdr {

enum Color : int { kRed = 0, kGreen = 1, kBlue = 2 };

/// 4x4 multi-exposure CFA pattern. Each cell assigns one (color, exposure)
/// pair to a pixel site; the pattern tiles the image with period 4 in both
/// axes. Channel index of the sub-mosaicked stack equals the row-major cell
/// index.
struct MosaicPattern {
  struct Site {
    int color = kGreen;     // 0=R, 1=G, 2=B
    int exposure = 0;       // index into ExposureSpec::rho
  };

  std::array<Site, 16> cell;

  Site site_at(int y, int x) const { return cell[(y % 4) * 4 + (x % 4)]; }
  int num_exposures() const;
  std::string to_string() const;

  /// Parses 16 whitespace-separated tokens, row-major; token = color letter
  /// (R/G/B) + exposure digit (0-2). Rejects malformed tokens, wrong counts,
  /// grids missing a color and gaps in the exposure indices.
  static MosaicPattern parse(const std::string& spec);

  /// Bayer-derived default: each 2x2 Bayer cell (G R / B G) carries one
  /// exposure level; the middle exposure occupies the two diagonal cells so
  /// every color is sampled at every level.
  ///
  ///   G0 R0 G1 R1
  ///   B0 G0 B1 G1
  ///   G1 R1 G2 R2
  ///   B1 G1 B2 G2
  static MosaicPattern bayer_default();
};

/// Sub-mosaicked representation: 16 sparse channels, one per pattern cell,
/// plus a binary mask of sampled sites. Exactly one channel is sampled at
/// every pixel and unsampled entries are zero.
struct SparseStack {
  Plane planes;  // H x W x 16
  Plane mask;    // H x W x 16, values in {0, 1}
};

SparseStack submosaic(const Plane& raw, const MosaicPattern& pattern);

/// Inverse of submosaic: sums the channels (one-hot per pixel).
Plane flatten(const SparseStack& stack);

/// Separable bilinear interpolation of each sparse channel from its sampled
/// lattice sites. Sampled values are preserved exactly; outside the sample
/// hull the nearest sample row/column is replicated.
Plane interp_sparse(const Plane& channelData, const Plane& mask);

}  // namespace snaphdr
