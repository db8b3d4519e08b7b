#pragma once

#include <cstddef>
#include <vector>

#include "snaphdr/parallel.hpp"

namespace snaphdr {

/// Dense H x W x C image with interleaved channels, double precision.
/// The one carrier type for HDR images, LDR exposures, RAW mosaics and
/// sub-mosaicked channel stacks.
struct Plane {
  int height = 0;
  int width = 0;
  int channels = 0;
  std::vector<double> data;  // row-major, channel-interleaved

  Plane() = default;
  Plane(int h, int w, int c, double fill = 0.0);

  double& at(int y, int x, int c = 0) {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  double at(int y, int x, int c = 0) const {
    return data[(static_cast<std::size_t>(y) * width + x) * channels + c];
  }
  std::size_t size() const { return data.size(); }
  bool same_shape(const Plane& o) const {
    return height == o.height && width == o.width && channels == o.channels;
  }
};

struct Gradient {
  Plane dx, dy;
};

/// Forward differences, last column/row zero (per channel).
Gradient gradient(const Plane& img);

enum class Transform { FlipH, FlipV, Transpose };

/// Exact index permutation; each transform is an involution.
Plane augment(const Plane& img, Transform t);

Plane crop(const Plane& img, int y0, int x0, int h, int w);

}  // namespace snaphdr
