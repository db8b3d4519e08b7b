#pragma once

#include <cstdint>
#include <vector>

#include "snaphdr/plane.hpp"

namespace testsupport {

/// Procedural HDR test scene: log-domain luminance ramp spanning several
/// decades, gaussian highlights, sinusoidal gratings, contrast rectangles
/// and a fine checkerboard, colored by piecewise-constant chromaticities.
snaphdr::Plane make_scene(std::uint64_t seed, int size = 64);

std::vector<snaphdr::Plane> make_scene_set(std::uint64_t seed, int count, int size = 64);

}  // namespace testsupport
