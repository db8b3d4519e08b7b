#pragma once

#include <string>

#include "snaphdr/plane.hpp"

namespace snaphdr::hdrio {

/// Radiance RGBE (.hdr). The reader handles new-style RLE, old-style repeat
/// codes and flat scanlines; the writer emits RLE scanlines for widths in
/// [8, 32767] and flat data otherwise. Round trip is exact to the shared
/// 8-bit mantissa (relative error <= 1/256 of the pixel max).
Plane read_hdr(const std::string& path);
void write_hdr(const Plane& img, const std::string& path);

/// PFM, 32-bit floats ("PF" color / "Pf" gray); negative scale marks
/// little-endian data. Round trip is bit-exact at float precision.
Plane read_pfm(const std::string& path);
void write_pfm(const Plane& img, const std::string& path);

/// Binary PPM (P6, maxval 255) storing a gamma-2.2 preview of linear data.
Plane read_ppm(const std::string& path);
void write_ppm(const Plane& img, const std::string& path, double gamma = 2.2);

/// Binary PGM (P5) with maxval 2^bitDepth - 1; stores value * maxval as
/// integers, lossless for data already on that grid. Two-byte big-endian
/// samples when maxval > 255.
Plane read_pgm(const std::string& path);
void write_pgm(const Plane& img, const std::string& path, int bitDepth = 8);

}  // namespace snaphdr::hdrio
