#include "support/scenes.hpp"

#include <algorithm>
#include <cmath>

#include "snaphdr/rng.hpp"

namespace testsupport {

using snaphdr::Plane;
using snaphdr::Rng;

Plane make_scene(std::uint64_t seed, int size) {
  Rng rng(seed);
  const int N = size;

  // luminance in log10 space: ramp covering ~2.5-3.5 decades
  const double u0 = rng.uniform(-3.4, -2.8);
  const double rampX = rng.uniform(0.8, 2.0);
  const double rampY = rng.uniform(0.8, 1.8);
  std::vector<double> lum(static_cast<std::size_t>(N) * N);
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x)
      lum[y * N + x] = std::pow(10.0, u0 + rampX * x / (N - 1.0) + rampY * y / (N - 1.0));

  // gaussian highlights
  const int blobs = 2 + static_cast<int>(rng.uniform_int(3));
  for (int i = 0; i < blobs; ++i) {
    const double cy = rng.uniform(0.1, 0.9) * N, cx = rng.uniform(0.1, 0.9) * N;
    const double sigma = rng.uniform(2.0, 8.0);
    const double amp = std::pow(10.0, rng.uniform(-1.0, 0.0));
    for (int y = 0; y < N; ++y)
      for (int x = 0; x < N; ++x) {
        const double d2 = (y - cy) * (y - cy) + (x - cx) * (x - cx);
        lum[y * N + x] += amp * std::exp(-d2 / (2.0 * sigma * sigma));
      }
  }

  // multiplicative gratings
  const int gratings = 1 + static_cast<int>(rng.uniform_int(2));
  for (int i = 0; i < gratings; ++i) {
    const double fx = rng.uniform(1.0, 10.0), fy = rng.uniform(1.0, 10.0);
    const double phase = rng.uniform(0.0, 6.283185307179586);
    const double m = rng.uniform(0.2, 0.7);
    for (int y = 0; y < N; ++y)
      for (int x = 0; x < N; ++x)
        lum[y * N + x] *= 1.0 + m * std::sin(6.283185307179586 * (fx * x + fy * y) / N + phase);
  }

  // contrast rectangles
  const int rects = 1 + static_cast<int>(rng.uniform_int(3));
  for (int i = 0; i < rects; ++i) {
    const int y0 = static_cast<int>(rng.uniform_int(N - 8));
    const int x0 = static_cast<int>(rng.uniform_int(N - 8));
    const int h = 6 + static_cast<int>(rng.uniform_int(N / 2));
    const int w = 6 + static_cast<int>(rng.uniform_int(N / 2));
    const double gain = std::pow(10.0, rng.uniform(-0.8, 0.8));
    for (int y = y0; y < std::min(N, y0 + h); ++y)
      for (int x = x0; x < std::min(N, x0 + w); ++x) lum[y * N + x] *= gain;
  }

  // fine checkerboard patch (hard for lattice interpolation)
  {
    const int period = 2 + static_cast<int>(rng.uniform_int(4));
    const int y0 = static_cast<int>(rng.uniform_int(N / 2));
    const int x0 = static_cast<int>(rng.uniform_int(N / 2));
    const double contrast = rng.uniform(1.5, 4.0);
    for (int y = y0; y < std::min(N, y0 + N / 3); ++y)
      for (int x = x0; x < std::min(N, x0 + N / 3); ++x)
        if (((y / period) + (x / period)) % 2 == 0) lum[y * N + x] *= contrast;
  }

  // piecewise-constant chromaticities over a random 2x2 partition
  double chroma[4][3];
  for (auto& region : chroma) {
    for (double& c : region) c = rng.uniform(0.25, 1.0);
    const double m = std::max({region[0], region[1], region[2]});
    for (double& c : region) c /= m;
  }
  const int splitY = N / 4 + static_cast<int>(rng.uniform_int(N / 2));
  const int splitX = N / 4 + static_cast<int>(rng.uniform_int(N / 2));

  Plane hdr(N, N, 3);
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x) {
      const int region = (y >= splitY ? 2 : 0) + (x >= splitX ? 1 : 0);
      for (int c = 0; c < 3; ++c) hdr.at(y, x, c) = lum[y * N + x] * chroma[region][c];
    }
  return hdr;
}

std::vector<Plane> make_scene_set(std::uint64_t seed, int count, int size) {
  std::vector<Plane> scenes;
  scenes.reserve(count);
  for (int i = 0; i < count; ++i)
    scenes.push_back(make_scene(seed + 1000003ULL * static_cast<std::uint64_t>(i + 1), size));
  return scenes;
}

}  // namespace testsupport
