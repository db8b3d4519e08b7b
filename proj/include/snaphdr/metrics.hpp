#pragma once

#include <string>
#include <utility>
#include <vector>

#include "snaphdr/plane.hpp"

namespace snaphdr::metrics {

/// PSNR values are capped here; equal images report the cap.
constexpr double kPsnrCap = 99.0;

/// 10 log10(peak^2 / MSE) with the MSE taken jointly over all pixels and
/// channels (pairwise summation for reproducibility).
double cpsnr(const Plane& pred, const Plane& truth, double peak = 1.0);

/// mu-law global tone map T(x) = log(1 + mu x) / log(1 + mu).
double gtonemap_value(double x, double mu = 5000.0);
Plane gtonemap(const Plane& x, double mu = 5000.0);

/// CPSNR after tone-mapping both images.
double gcpsnr(const Plane& pred, const Plane& truth, double mu = 5000.0);

/// Mean of ((pred - truth) / L_true)^2 over pixels and channels, where
/// L_true is the per-pixel max of the ground truth clamped below.
double ln_mse(const Plane& pred, const Plane& truth, double epsilonL = 1e-6);

/// For each threshold, the fraction of pixels whose mean squared RGB error
/// exceeds it. Thresholds must be sorted ascending.
std::vector<std::pair<double, double>> error_pixel_ratio(const Plane& pred, const Plane& truth,
                                                         const std::vector<double>& thresholds);

struct EvalReport {
  double cpsnr = 0.0;
  double gcpsnr = 0.0;
  double lnmse = 0.0;
  std::vector<std::pair<double, double>> errorRatioCurve;
};

EvalReport evaluate(const Plane& pred, const Plane& truth, const std::vector<double>& thresholds);

std::string report_text(const EvalReport& r);
std::string report_csv(const EvalReport& r);
std::string curve_csv(const EvalReport& r);

/// Deterministic pairwise reduction used by all metric sums.
double pairwise_sum(const double* data, std::size_t n);

}  // namespace snaphdr::metrics
