#include "snaphdr/mosaic.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace snaphdr {

int MosaicPattern::num_exposures() const {
  int maxExp = 0;
  for (const Site& s : cell) maxExp = std::max(maxExp, s.exposure);
  return maxExp + 1;
}

std::string MosaicPattern::to_string() const {
  static const char* names = "RGB";
  std::ostringstream out;
  for (int i = 0; i < 16; ++i) {
    if (i) out << (i % 4 == 0 ? '\n' : ' ');
    out << names[cell[i].color] << cell[i].exposure;
  }
  return out.str();
}

MosaicPattern MosaicPattern::parse(const std::string& spec) {
  std::istringstream in(spec);
  std::string token;
  MosaicPattern p;
  int count = 0;
  while (in >> token) {
    if (count == 16) throw std::invalid_argument("pattern: expected 16 entries, got more");
    if (token.size() != 2) throw std::invalid_argument("pattern: malformed token '" + token + "'");
    Site s;
    switch (token[0]) {
      case 'R': s.color = kRed; break;
      case 'G': s.color = kGreen; break;
      case 'B': s.color = kBlue; break;
      default: throw std::invalid_argument("pattern: malformed token '" + token + "'");
    }
    if (token[1] < '0' || token[1] > '2')
      throw std::invalid_argument("pattern: malformed token '" + token + "'");
    s.exposure = token[1] - '0';
    p.cell[count++] = s;
  }
  if (count != 16)
    throw std::invalid_argument("pattern: expected 16 entries, got " + std::to_string(count));

  bool haveColor[3] = {false, false, false};
  bool haveExp[3] = {false, false, false};
  int maxExp = 0;
  for (const Site& s : p.cell) {
    haveColor[s.color] = true;
    haveExp[s.exposure] = true;
    maxExp = std::max(maxExp, s.exposure);
  }
  static const char* names = "RGB";
  for (int c = 0; c < 3; ++c)
    if (!haveColor[c]) throw std::invalid_argument(std::string("pattern: missing color ") + names[c]);
  for (int e = 0; e <= maxExp; ++e)
    if (!haveExp[e])
      throw std::invalid_argument("pattern: missing exposure level " + std::to_string(e));
  return p;
}

MosaicPattern MosaicPattern::bayer_default() {
  return parse(
      "G0 R0 G1 R1 "
      "B0 G0 B1 G1 "
      "G1 R1 G2 R2 "
      "B1 G1 B2 G2");
}

SparseStack submosaic(const Plane& raw, const MosaicPattern& pattern) {
  (void)pattern;  // channel layout is positional; pattern gives the channels meaning
  if (raw.channels != 1) throw std::invalid_argument("submosaic: raw must be single-channel");
  if (raw.height < 4 || raw.width < 4)
    throw std::invalid_argument("submosaic: raw must be at least 4x4");
  SparseStack out{Plane(raw.height, raw.width, 16), Plane(raw.height, raw.width, 16)};
  for (int y = 0; y < raw.height; ++y) {
    for (int x = 0; x < raw.width; ++x) {
      const int ch = (y % 4) * 4 + (x % 4);
      out.planes.at(y, x, ch) = raw.at(y, x);
      out.mask.at(y, x, ch) = 1.0;
    }
  }
  return out;
}

Plane flatten(const SparseStack& stack) {
  const Plane& p = stack.planes;
  Plane out(p.height, p.width, 1);
  for (int y = 0; y < p.height; ++y) {
    for (int x = 0; x < p.width; ++x) {
#ifndef NDEBUG
      double hits = 0;
      for (int c = 0; c < p.channels; ++c) hits += stack.mask.at(y, x, c);
      assert(hits == 1.0 && "flatten: mask must be one-hot per pixel");
#endif
      double v = 0;
      for (int c = 0; c < p.channels; ++c) v += p.at(y, x, c);
      out.at(y, x) = v;
    }
  }
  return out;
}

}  // namespace snaphdr
