#pragma once

#include <vector>

#include "snaphdr/mosaic.hpp"
#include "snaphdr/plane.hpp"

namespace snaphdr {

/// Radiometric model: attenuation factor per exposure level plus the common
/// exposure time. Dividing a RAW value by rho[k] * deltaT converts it to
/// sensor irradiance.
struct ExposureSpec {
  std::vector<double> rho{1.0, 4.0, 16.0};
  double deltaT = 1.0;

  void validate() const;
};

/// Tabulated merge weight w(z) on [0, 1] with w(0) = w(1) = 0. The table has
/// 257 nodes so the triangular hat is represented exactly by the linear
/// lookup.
class WeightFn {
 public:
  enum class Shape { Hat, Trapezoid };

  static WeightFn hat();
  /// Flat top with linear ramps of the given width at both ends.
  static WeightFn trapezoid(double rampWidth = 0.125);

  /// Piecewise-linear table lookup; z is clamped to [0, 1].
  double operator()(double z) const;

 private:
  explicit WeightFn(std::vector<double> table) : table_(std::move(table)) {}
  std::vector<double> table_;
};

double to_irradiance(double x, double rho, double deltaT);
Plane to_irradiance(const Plane& x, double rho, double deltaT);

struct OuThresholds {
  double tauO;  // 0.995 / (rho * deltaT)
  double tauU;  // 0.005 / (rho * deltaT)
};
OuThresholds ou_thresholds(double rho, double deltaT);

/// Sub-mosaicked irradiance CFA RAW data plus per-exposure audit flags.
struct IrradianceStack {
  SparseStack stack;       // 16 sparse channels in irradiance units
  MosaicPattern pattern;   // gives each channel its (color, exposure) meaning
  struct LevelInfo {
    bool corrected = false;  // O/U correction pass has run for this level
    int clampedOver = 0;     // saturated samples with no lower level to borrow from
    int clampedUnder = 0;    // blacked-out samples with no higher level
  };
  std::vector<LevelInfo> levels;
};

/// Converts a sub-mosaicked LDR stack to the irradiance domain, channel by
/// channel.
IrradianceStack to_irradiance_stack(const SparseStack& x, const MosaicPattern& pattern,
                                    const ExposureSpec& spec);

/// O/U-pixel correction. Over-exposed samples (xi > tauO) are replaced by the
/// interpolated one-step-lower-exposure irradiance of the same color,
/// processing levels from low to high exposure; under-exposed samples are
/// corrected from the one-step-higher level, from high to low. Donor levels
/// are used in their progressively corrected state. The lowest level's
/// saturated samples and the highest level's blacked-out samples have no
/// donor; they are clamped to the threshold and counted in the level flags.
IrradianceStack ou_correct(const IrradianceStack& in, const ExposureSpec& spec);

/// Debevec-style weighted merge of an LDR exposure stack into irradiance.
/// Pixels where every weight vanishes fall back to the single exposure whose
/// value is farthest from both clip ends (ties to the lower exposure).
Plane debevec_merge(const std::vector<Plane>& ldrStack, const ExposureSpec& spec,
                    const WeightFn& w);

/// Pixelwise max over channels (the value component of HSV for linear RGB).
Plane tentative_luminance(const Plane& hdr);

}  // namespace snaphdr
