#include "snaphdr/nn_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <type_traits>

#include "snaphdr/parallel.hpp"

namespace snaphdr::autonet {

namespace {

// Zero-padded copy, pad on every spatial side.
Tensor pad_spatial(const Tensor& x, int p) {
  Tensor out(x.n, x.c, x.h + 2 * p, x.w + 2 * p);
  parallel_for(static_cast<std::int64_t>(x.n) * x.c, [&](std::int64_t nc) {
    const int in = static_cast<int>(nc / x.c);
    const int ic = static_cast<int>(nc % x.c);
    for (int y = 0; y < x.h; ++y) {
      const double* src = &x.v[x.index(in, ic, y, 0)];
      double* dst = &out.v[out.index(in, ic, y + p, p)];
      std::copy(src, src + x.w, dst);
    }
  });
  return out;
}

void check_conv_shapes(const Tensor& x, const Tensor& w, const Tensor& b) {
  if (w.h != w.w || w.h % 2 == 0) throw std::invalid_argument("conv2d: kernel must be square and odd");
  if (x.c != w.c) throw std::invalid_argument("conv2d: input channel mismatch");
  if (b.n != w.n || b.c != 1 || b.h != 1 || b.w != 1)
    throw std::invalid_argument("conv2d: bias shape mismatch");
}

constexpr int kLanes = 8;

#if defined(__GNUC__) && !defined(SNAPHDR_NO_VECTOR_EXT)
// 8-double SIMD lanes; the attribute form lowers to whatever the target
// supports, so the arithmetic order is identical everywhere.
typedef double Vec __attribute__((vector_size(kLanes * sizeof(double)), aligned(8), may_alias));

inline Vec load(const double* p) { return *reinterpret_cast<const Vec*>(p); }
inline void store(double* p, Vec v) { *reinterpret_cast<Vec*>(p) = v; }

// orow[x] += sum_kx wrow[kx] * irow[x + kx]
template <int K>
inline void row_taps(double* __restrict orow, const double* __restrict irow,
                     const double* __restrict wrow, int W) {
  int xj = 0;
  for (; xj + kLanes <= W; xj += kLanes) {
    Vec acc = load(orow + xj);
    for (int kx = 0; kx < K; ++kx) acc += wrow[kx] * load(irow + xj + kx);
    store(orow + xj, acc);
  }
  for (; xj < W; ++xj) {
    double acc = 0.0;
    for (int kx = 0; kx < K; ++kx) acc += wrow[kx] * irow[xj + kx];
    orow[xj] += acc;
  }
}

// wacc[kx] += sum_{y,x} grow[y][x] * irow[y][x + kx] over one spatial plane,
// with split accumulator lanes held across all rows. The lane order is
// fixed, so the reduction is bit-reproducible for any thread count.
template <int K>
inline void plane_tap_dots(double* __restrict wacc, const double* grow, int growStride,
                           const double* irow, int irowStride, int H, int W) {
  Vec lanes[K];
  for (int kx = 0; kx < K; ++kx) lanes[kx] = Vec{};
  for (int y = 0; y < H; ++y, grow += growStride, irow += irowStride) {
    int xj = 0;
    for (; xj + kLanes <= W; xj += kLanes) {
      const Vec g = load(grow + xj);
      for (int kx = 0; kx < K; ++kx) lanes[kx] += g * load(irow + xj + kx);
    }
    for (; xj < W; ++xj)
      for (int kx = 0; kx < K; ++kx) lanes[kx][0] += grow[xj] * irow[xj + kx];
  }
  for (int kx = 0; kx < K; ++kx) {
    double s = 0.0;
    for (int l = 0; l < kLanes; ++l) s += lanes[kx][l];
    wacc[kx] += s;
  }
}
#else
template <int K>
inline void row_taps(double* __restrict orow, const double* __restrict irow,
                     const double* __restrict wrow, int W) {
  for (int xj = 0; xj < W; ++xj) {
    double acc = 0.0;
    for (int kx = 0; kx < K; ++kx) acc += wrow[kx] * irow[xj + kx];
    orow[xj] += acc;
  }
}

template <int K>
inline void plane_tap_dots(double* __restrict wacc, const double* grow, int growStride,
                           const double* irow, int irowStride, int H, int W) {
  double lanes[K][kLanes] = {};
  for (int y = 0; y < H; ++y, grow += growStride, irow += irowStride) {
    int xj = 0;
    for (; xj + kLanes <= W; xj += kLanes)
      for (int kx = 0; kx < K; ++kx)
        for (int l = 0; l < kLanes; ++l) lanes[kx][l] += grow[xj + l] * irow[xj + l + kx];
    for (; xj < W; ++xj)
      for (int kx = 0; kx < K; ++kx) lanes[kx][0] += grow[xj] * irow[xj + kx];
  }
  for (int kx = 0; kx < K; ++kx) {
    double s = 0.0;
    for (int l = 0; l < kLanes; ++l) s += lanes[kx][l];
    wacc[kx] += s;
  }
}
#endif

template <int K>
void conv_forward_impl(const Tensor& xp, const Tensor& weights, const Tensor& bias, Tensor& out) {
  const int Ci = xp.c, Co = weights.n, H = out.h, W = out.w;
  parallel_for(static_cast<std::int64_t>(out.n) * Co, [&](std::int64_t nco) {
    const int in = static_cast<int>(nco / Co);
    const int co = static_cast<int>(nco % Co);
    const double b = bias.v[co];
    for (int y = 0; y < H; ++y) {
      double* orow = &out.v[out.index(in, co, y, 0)];
      for (int xj = 0; xj < W; ++xj) orow[xj] = b;
      for (int ci = 0; ci < Ci; ++ci)
        for (int ky = 0; ky < K; ++ky)
          row_taps<K>(orow, &xp.v[xp.index(in, ci, y + ky, 0)],
                      &weights.v[weights.index(co, ci, ky, 0)], W);
    }
  });
}

template <int K>
void conv_gradw_impl(const Tensor& xp, const Tensor& gradOut, Tensor& gradW, Tensor& gradB) {
  const int Ci = xp.c, Co = gradOut.c, H = gradOut.h, W = gradOut.w;
  parallel_for(Co, [&](std::int64_t co64) {
    const int co = static_cast<int>(co64);
    double bsum = 0.0;
    for (int in = 0; in < gradOut.n; ++in) {
      const double* gplane = &gradOut.v[gradOut.index(in, co, 0, 0)];
      for (std::size_t i = 0; i < static_cast<std::size_t>(H) * W; ++i) bsum += gplane[i];
      for (int ci = 0; ci < Ci; ++ci)
        for (int ky = 0; ky < K; ++ky)
          plane_tap_dots<K>(&gradW.v[gradW.index(co, ci, ky, 0)], gplane, W,
                            &xp.v[xp.index(in, ci, ky, 0)], xp.w, H, W);
    }
    gradB.v[co] = bsum;
  });
}

template <int K>
void conv_gradin_impl(const Tensor& gp, const Tensor& weights, Tensor& gradIn) {
  const int Ci = gradIn.c, Co = weights.n, H = gradIn.h, W = gradIn.w;
  // weights transposed to (ci, co) and rotated 180 degrees, so the inner
  // loops mirror the forward pass
  Tensor wt(Ci, Co, K, K);
  for (int co = 0; co < Co; ++co)
    for (int ci = 0; ci < Ci; ++ci)
      for (int ky = 0; ky < K; ++ky)
        for (int kx = 0; kx < K; ++kx)
          wt.at(ci, co, ky, kx) = weights.at(co, ci, K - 1 - ky, K - 1 - kx);

  parallel_for(static_cast<std::int64_t>(gradIn.n) * Ci, [&](std::int64_t nci) {
    const int in = static_cast<int>(nci / Ci);
    const int ci = static_cast<int>(nci % Ci);
    for (int y = 0; y < H; ++y) {
      double* orow = &gradIn.v[gradIn.index(in, ci, y, 0)];
      for (int co = 0; co < Co; ++co)
        for (int ky = 0; ky < K; ++ky)
          row_taps<K>(orow, &gp.v[gp.index(in, co, y + ky, 0)],
                      &wt.v[wt.index(ci, co, ky, 0)], W);
    }
  });
}

template <typename Fn>
void dispatch_kernel(int K, const Fn& fn) {
  switch (K) {
    case 1: fn(std::integral_constant<int, 1>{}); break;
    case 3: fn(std::integral_constant<int, 3>{}); break;
    case 5: fn(std::integral_constant<int, 5>{}); break;
    case 7: fn(std::integral_constant<int, 7>{}); break;
    case 9: fn(std::integral_constant<int, 9>{}); break;
    default: throw std::invalid_argument("conv2d: unsupported kernel size");
  }
}

}  // namespace

Tensor conv2d_forward(const Tensor& x, const Tensor& weights, const Tensor& bias) {
  check_conv_shapes(x, weights, bias);
  const int K = weights.h;
  const Tensor xp = pad_spatial(x, K / 2);
  Tensor out(x.n, weights.n, x.h, x.w);
  dispatch_kernel(K, [&](auto kc) { conv_forward_impl<decltype(kc)::value>(xp, weights, bias, out); });
  return out;
}

ConvGrads conv2d_backward(const Tensor& gradOut, const Tensor& savedInput,
                          const Tensor& weights, bool wantGradIn) {
  const int K = weights.h, p = K / 2;
  const int Ci = savedInput.c, Co = weights.n, H = savedInput.h, W = savedInput.w;
  if (gradOut.n != savedInput.n || gradOut.c != Co || gradOut.h != H || gradOut.w != W)
    throw std::invalid_argument("conv2d_backward: gradOut shape mismatch");

  ConvGrads g;
  g.gradW.resize(Co, Ci, K, K);
  g.gradB.resize(Co, 1, 1, 1);
  const Tensor xp = pad_spatial(savedInput, p);
  dispatch_kernel(K, [&](auto kc) {
    conv_gradw_impl<decltype(kc)::value>(xp, gradOut, g.gradW, g.gradB);
  });

  if (wantGradIn) {
    g.gradIn.resize(savedInput.n, Ci, H, W);
    const Tensor gp = pad_spatial(gradOut, p);
    dispatch_kernel(K, [&](auto kc) {
      conv_gradin_impl<decltype(kc)::value>(gp, weights, g.gradIn);
    });
  }
  return g;
}

Tensor relu_forward(const Tensor& x) {
  Tensor out = x;
  out.g.clear();
  for (double& v : out.v) v = v > 0.0 ? v : 0.0;
  return out;
}

Tensor relu_backward(const Tensor& gradOut, const Tensor& savedOutput) {
  if (!gradOut.same_shape(savedOutput))
    throw std::invalid_argument("relu_backward: shape mismatch");
  Tensor out = gradOut;
  out.g.clear();
  for (std::size_t i = 0; i < out.v.size(); ++i)
    if (savedOutput.v[i] <= 0.0) out.v[i] = 0.0;
  return out;
}

Pool2Result maxpool2_forward(const Tensor& x) {
  if (x.h % 2 != 0 || x.w % 2 != 0)
    throw std::invalid_argument("maxpool2: spatial dims must be even");
  Pool2Result r;
  r.out.resize(x.n, x.c, x.h / 2, x.w / 2);
  r.argmax.assign(r.out.numel(), 0);
  for (int in = 0; in < x.n; ++in) {
    for (int ic = 0; ic < x.c; ++ic) {
      for (int y = 0; y < x.h; y += 2) {
        for (int xx = 0; xx < x.w; xx += 2) {
          double best = x.at(in, ic, y, xx);
          int arg = 0;
          const double cands[3] = {x.at(in, ic, y, xx + 1), x.at(in, ic, y + 1, xx),
                                   x.at(in, ic, y + 1, xx + 1)};
          for (int i = 0; i < 3; ++i)
            if (cands[i] > best) {
              best = cands[i];
              arg = i + 1;
            }
          const std::size_t oi = r.out.index(in, ic, y / 2, xx / 2);
          r.out.v[oi] = best;
          r.argmax[oi] = static_cast<std::uint8_t>(arg);
        }
      }
    }
  }
  return r;
}

Tensor maxpool2_backward(const Tensor& gradOut, const Pool2Result& saved, int inH, int inW) {
  Tensor g(gradOut.n, gradOut.c, inH, inW);
  for (int in = 0; in < gradOut.n; ++in) {
    for (int ic = 0; ic < gradOut.c; ++ic) {
      for (int y = 0; y < gradOut.h; ++y) {
        for (int xx = 0; xx < gradOut.w; ++xx) {
          const std::size_t oi = gradOut.index(in, ic, y, xx);
          const int arg = saved.argmax[oi];
          g.at(in, ic, 2 * y + arg / 2, 2 * xx + arg % 2) = gradOut.v[oi];
        }
      }
    }
  }
  return g;
}

namespace {

// Per-output-coordinate source taps for factor-2 bilinear upsampling,
// half-pixel-center convention with edge clamping.
struct Tap {
  int i0, i1;
  double w0, w1;
};

Tap bilinear_tap(int outIdx, int inExtent) {
  const double src = (outIdx + 0.5) / 2.0 - 0.5;
  int i0 = static_cast<int>(std::floor(src));
  const double w1 = src - i0;
  int i1 = i0 + 1;
  i0 = std::clamp(i0, 0, inExtent - 1);
  i1 = std::clamp(i1, 0, inExtent - 1);
  return {i0, i1, 1.0 - w1, w1};
}

}  // namespace

Tensor upsample2_forward(const Tensor& x, UpsampleMode mode) {
  Tensor out(x.n, x.c, x.h * 2, x.w * 2);
  if (mode == UpsampleMode::Nearest) {
    for (int in = 0; in < x.n; ++in)
      for (int ic = 0; ic < x.c; ++ic)
        for (int y = 0; y < out.h; ++y)
          for (int xx = 0; xx < out.w; ++xx)
            out.at(in, ic, y, xx) = x.at(in, ic, y / 2, xx / 2);
    return out;
  }
  for (int in = 0; in < x.n; ++in) {
    for (int ic = 0; ic < x.c; ++ic) {
      for (int y = 0; y < out.h; ++y) {
        const Tap ty = bilinear_tap(y, x.h);
        for (int xx = 0; xx < out.w; ++xx) {
          const Tap tx = bilinear_tap(xx, x.w);
          out.at(in, ic, y, xx) = ty.w0 * (tx.w0 * x.at(in, ic, ty.i0, tx.i0) +
                                           tx.w1 * x.at(in, ic, ty.i0, tx.i1)) +
                                  ty.w1 * (tx.w0 * x.at(in, ic, ty.i1, tx.i0) +
                                           tx.w1 * x.at(in, ic, ty.i1, tx.i1));
        }
      }
    }
  }
  return out;
}

Tensor upsample2_backward(const Tensor& gradOut, UpsampleMode mode, int inH, int inW) {
  Tensor g(gradOut.n, gradOut.c, inH, inW);
  if (mode == UpsampleMode::Nearest) {
    for (int in = 0; in < gradOut.n; ++in)
      for (int ic = 0; ic < gradOut.c; ++ic)
        for (int y = 0; y < gradOut.h; ++y)
          for (int xx = 0; xx < gradOut.w; ++xx)
            g.at(in, ic, y / 2, xx / 2) += gradOut.at(in, ic, y, xx);
    return g;
  }
  for (int in = 0; in < gradOut.n; ++in) {
    for (int ic = 0; ic < gradOut.c; ++ic) {
      for (int y = 0; y < gradOut.h; ++y) {
        const Tap ty = bilinear_tap(y, inH);
        for (int xx = 0; xx < gradOut.w; ++xx) {
          const Tap tx = bilinear_tap(xx, inW);
          const double go = gradOut.at(in, ic, y, xx);
          g.at(in, ic, ty.i0, tx.i0) += ty.w0 * tx.w0 * go;
          g.at(in, ic, ty.i0, tx.i1) += ty.w0 * tx.w1 * go;
          g.at(in, ic, ty.i1, tx.i0) += ty.w1 * tx.w0 * go;
          g.at(in, ic, ty.i1, tx.i1) += ty.w1 * tx.w1 * go;
        }
      }
    }
  }
  return g;
}

Tensor concat_forward(const Tensor& a, const Tensor& b) {
  if (a.n != b.n || a.h != b.h || a.w != b.w)
    throw std::invalid_argument("concat: spatial/batch shape mismatch");
  Tensor out(a.n, a.c + b.c, a.h, a.w);
  const std::size_t planeA = static_cast<std::size_t>(a.c) * a.h * a.w;
  const std::size_t planeB = static_cast<std::size_t>(b.c) * b.h * b.w;
  for (int in = 0; in < a.n; ++in) {
    std::copy(a.v.begin() + in * planeA, a.v.begin() + (in + 1) * planeA,
              out.v.begin() + in * (planeA + planeB));
    std::copy(b.v.begin() + in * planeB, b.v.begin() + (in + 1) * planeB,
              out.v.begin() + in * (planeA + planeB) + planeA);
  }
  return out;
}

void concat_backward(const Tensor& gradOut, int aChannels, Tensor& gradA, Tensor& gradB) {
  const int bChannels = gradOut.c - aChannels;
  if (bChannels < 0) throw std::invalid_argument("concat_backward: bad split");
  gradA.resize(gradOut.n, aChannels, gradOut.h, gradOut.w);
  gradB.resize(gradOut.n, bChannels, gradOut.h, gradOut.w);
  const std::size_t planeA = gradA.numel() / gradOut.n;
  const std::size_t planeB = gradB.numel() / gradOut.n;
  for (int in = 0; in < gradOut.n; ++in) {
    const auto base = gradOut.v.begin() + in * (planeA + planeB);
    std::copy(base, base + planeA, gradA.v.begin() + in * planeA);
    std::copy(base + planeA, base + planeA + planeB, gradB.v.begin() + in * planeB);
  }
}

}  // namespace snaphdr::autonet
