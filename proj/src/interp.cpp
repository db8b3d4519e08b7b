#include <cassert>
#include <stdexcept>
#include <vector>

#include "snaphdr/mosaic.hpp"

namespace snaphdr {

namespace {

struct Bracket {
  int lo, hi;   // indices into the sample coordinate list
  double t;     // blend weight toward hi; 0 when lo == hi
};

// Bracketing sample coordinates for every output coordinate, clamped to the
// hull so exterior pixels replicate the nearest sample.
std::vector<Bracket> brackets(const std::vector<int>& samples, int extent) {
  std::vector<Bracket> out(extent);
  int seg = 0;
  for (int i = 0; i < extent; ++i) {
    if (i <= samples.front()) {
      out[i] = {0, 0, 0.0};
      continue;
    }
    if (i >= samples.back()) {
      const int last = static_cast<int>(samples.size()) - 1;
      out[i] = {last, last, 0.0};
      continue;
    }
    while (samples[seg + 1] < i) ++seg;
    if (samples[seg] == i) {
      out[i] = {seg, seg, 0.0};
    } else if (samples[seg + 1] == i) {
      out[i] = {seg + 1, seg + 1, 0.0};
    } else {
      out[i] = {seg, seg + 1,
                static_cast<double>(i - samples[seg]) /
                    static_cast<double>(samples[seg + 1] - samples[seg])};
    }
  }
  return out;
}

}  // namespace

Plane interp_sparse(const Plane& channelData, const Plane& mask) {
  if (!channelData.same_shape(mask))
    throw std::invalid_argument("interp_sparse: data and mask shapes differ");
  const int H = channelData.height, W = channelData.width, C = channelData.channels;
  Plane out(H, W, C);

  for (int c = 0; c < C; ++c) {
    std::vector<int> rows, cols;
    std::vector<char> rowHas(H, 0), colHas(W, 0);
    for (int y = 0; y < H; ++y)
      for (int x = 0; x < W; ++x)
        if (mask.at(y, x, c) != 0.0) rowHas[y] = colHas[x] = 1;
    for (int y = 0; y < H; ++y)
      if (rowHas[y]) rows.push_back(y);
    for (int x = 0; x < W; ++x)
      if (colHas[x]) cols.push_back(x);
    if (rows.empty()) throw std::invalid_argument("interp_sparse: empty mask channel");

#ifndef NDEBUG
    // sampled sites must form the full row x column lattice
    for (int y : rows)
      for (int x : cols) assert(mask.at(y, x, c) != 0.0 && "interp_sparse: non-lattice mask");
#endif

    const auto rb = brackets(rows, H);
    const auto cb = brackets(cols, W);
    for (int y = 0; y < H; ++y) {
      const Bracket& r = rb[y];
      const int yLo = rows[r.lo], yHi = rows[r.hi];
      for (int x = 0; x < W; ++x) {
        const Bracket& s = cb[x];
        const int xLo = cols[s.lo], xHi = cols[s.hi];
        const double v00 = channelData.at(yLo, xLo, c);
        const double v01 = channelData.at(yLo, xHi, c);
        const double v10 = channelData.at(yHi, xLo, c);
        const double v11 = channelData.at(yHi, xHi, c);
        const double top = v00 + s.t * (v01 - v00);
        const double bot = v10 + s.t * (v11 - v10);
        out.at(y, x, c) = top + r.t * (bot - top);
      }
    }
  }
  return out;
}

}  // namespace snaphdr
