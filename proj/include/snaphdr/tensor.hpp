#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace snaphdr::autonet {

/// Dense NCHW tensor of doubles with an optional gradient buffer of the same
/// shape. Weights reuse the layout as (outCh, inCh, kH, kW), biases as
/// (outCh, 1, 1, 1).
struct Tensor {
  int n = 0, c = 0, h = 0, w = 0;
  std::vector<double> v;
  std::vector<double> g;

  Tensor() = default;
  Tensor(int n_, int c_, int h_, int w_, double fill = 0.0);

  std::size_t numel() const { return v.size(); }
  bool same_shape(const Tensor& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }
  void resize(int n_, int c_, int h_, int w_);

  std::size_t index(int in, int ic, int iy, int ix) const {
    return ((static_cast<std::size_t>(in) * c + ic) * h + iy) * w + ix;
  }
  double& at(int in, int ic, int iy, int ix) { return v[index(in, ic, iy, ix)]; }
  double at(int in, int ic, int iy, int ix) const { return v[index(in, ic, iy, ix)]; }

  /// Allocates (if needed) and zeroes the gradient buffer.
  void zero_grad();
  bool has_grad() const { return g.size() == v.size(); }

  bool all_finite() const;
};

struct NamedTensor {
  std::string name;
  Tensor* tensor = nullptr;
};

}  // namespace snaphdr::autonet
