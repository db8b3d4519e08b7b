#include "snaphdr/plane.hpp"

#include <atomic>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snaphdr {

namespace {
std::atomic<int> g_threads{0};
}

void set_num_threads(int n) { g_threads.store(n < 0 ? 0 : n); }

int num_threads() {
  int n = g_threads.load();
#ifdef _OPENMP
  if (n == 0) return omp_get_max_threads();
#endif
  return n == 0 ? 1 : n;
}

namespace detail {
void run_parallel(std::int64_t n, void (*trampoline)(void*, std::int64_t), void* ctx) {
#ifdef _OPENMP
  const int requested = g_threads.load();
  if (requested == 1 || n <= 1) {
    for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
    return;
  }
#pragma omp parallel for schedule(static) num_threads(requested == 0 ? omp_get_max_threads() \
                                                                     : requested)
  for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#else
  for (std::int64_t i = 0; i < n; ++i) trampoline(ctx, i);
#endif
}
}  // namespace detail

Plane::Plane(int h, int w, int c, double fill)
    : height(h), width(w), channels(c), data(static_cast<std::size_t>(h) * w * c, fill) {
  if (h < 0 || w < 0 || c < 0) throw std::invalid_argument("Plane: negative dimension");
}

Gradient gradient(const Plane& img) {
  if (img.height < 2 || img.width < 2)
    throw std::invalid_argument("gradient: image must be at least 2x2");
  Gradient g{Plane(img.height, img.width, img.channels), Plane(img.height, img.width, img.channels)};
  const int H = img.height, W = img.width, C = img.channels;
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      for (int c = 0; c < C; ++c) {
        if (x + 1 < W) g.dx.at(y, x, c) = img.at(y, x + 1, c) - img.at(y, x, c);
        if (y + 1 < H) g.dy.at(y, x, c) = img.at(y + 1, x, c) - img.at(y, x, c);
      }
    }
  }
  return g;
}

Plane augment(const Plane& img, Transform t) {
  const int H = img.height, W = img.width, C = img.channels;
  Plane out = (t == Transform::Transpose) ? Plane(W, H, C) : Plane(H, W, C);
  for (int y = 0; y < H; ++y) {
    for (int x = 0; x < W; ++x) {
      for (int c = 0; c < C; ++c) {
        switch (t) {
          case Transform::FlipH: out.at(y, W - 1 - x, c) = img.at(y, x, c); break;
          case Transform::FlipV: out.at(H - 1 - y, x, c) = img.at(y, x, c); break;
          case Transform::Transpose: out.at(x, y, c) = img.at(y, x, c); break;
        }
      }
    }
  }
  return out;
}

Plane crop(const Plane& img, int y0, int x0, int h, int w) {
  if (y0 < 0 || x0 < 0 || y0 + h > img.height || x0 + w > img.width)
    throw std::out_of_range("crop: window outside image");
  Plane out(h, w, img.channels);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x)
      for (int c = 0; c < img.channels; ++c) out.at(y, x, c) = img.at(y0 + y, x0 + x, c);
  return out;
}

}  // namespace snaphdr
