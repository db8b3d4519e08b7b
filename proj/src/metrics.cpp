#include "snaphdr/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace snaphdr::metrics {

double pairwise_sum(const double* data, std::size_t n) {
  if (n <= 16) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += data[i];
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(data, half) + pairwise_sum(data + half, n - half);
}

namespace {

double mse(const Plane& pred, const Plane& truth) {
  if (!pred.same_shape(truth)) throw std::invalid_argument("metrics: shape mismatch");
  std::vector<double> sq(pred.size());
  for (std::size_t i = 0; i < sq.size(); ++i) {
    const double d = pred.data[i] - truth.data[i];
    sq[i] = d * d;
  }
  return pairwise_sum(sq.data(), sq.size()) / static_cast<double>(sq.size());
}

}  // namespace

double cpsnr(const Plane& pred, const Plane& truth, double peak) {
  const double m = mse(pred, truth);
  if (m <= 0.0) return kPsnrCap;
  return std::min(kPsnrCap, 10.0 * std::log10(peak * peak / m));
}

double gtonemap_value(double x, double mu) { return std::log1p(mu * x) / std::log1p(mu); }

Plane gtonemap(const Plane& x, double mu) {
  Plane out = x;
  const double inv = 1.0 / std::log1p(mu);
  for (double& v : out.data) v = std::log1p(mu * v) * inv;
  return out;
}

double gcpsnr(const Plane& pred, const Plane& truth, double mu) {
  return cpsnr(gtonemap(pred, mu), gtonemap(truth, mu));
}

double ln_mse(const Plane& pred, const Plane& truth, double epsilonL) {
  if (!pred.same_shape(truth)) throw std::invalid_argument("metrics: shape mismatch");
  std::vector<double> sq(pred.size());
  std::size_t i = 0;
  for (int y = 0; y < pred.height; ++y) {
    for (int x = 0; x < pred.width; ++x) {
      double lum = truth.at(y, x, 0);
      for (int c = 1; c < truth.channels; ++c) lum = std::max(lum, truth.at(y, x, c));
      lum = std::max(lum, epsilonL);
      for (int c = 0; c < pred.channels; ++c, ++i) {
        const double d = (pred.at(y, x, c) - truth.at(y, x, c)) / lum;
        sq[i] = d * d;
      }
    }
  }
  return pairwise_sum(sq.data(), sq.size()) / static_cast<double>(sq.size());
}

std::vector<std::pair<double, double>> error_pixel_ratio(const Plane& pred, const Plane& truth,
                                                         const std::vector<double>& thresholds) {
  if (!pred.same_shape(truth)) throw std::invalid_argument("metrics: shape mismatch");
  for (std::size_t i = 1; i < thresholds.size(); ++i)
    if (thresholds[i] < thresholds[i - 1])
      throw std::invalid_argument("metrics: thresholds must be sorted ascending");

  const std::size_t pixels = static_cast<std::size_t>(pred.height) * pred.width;
  std::vector<double> pixelErr(pixels);
  std::size_t p = 0;
  for (int y = 0; y < pred.height; ++y) {
    for (int x = 0; x < pred.width; ++x, ++p) {
      double acc = 0.0;
      for (int c = 0; c < pred.channels; ++c) {
        const double d = pred.at(y, x, c) - truth.at(y, x, c);
        acc += d * d;
      }
      pixelErr[p] = acc / pred.channels;
    }
  }
  std::vector<std::pair<double, double>> curve;
  curve.reserve(thresholds.size());
  for (double t : thresholds) {
    std::size_t count = 0;
    for (double e : pixelErr)
      if (e > t) ++count;
    curve.emplace_back(t, static_cast<double>(count) / static_cast<double>(pixels));
  }
  return curve;
}

EvalReport evaluate(const Plane& pred, const Plane& truth, const std::vector<double>& thresholds) {
  EvalReport r;
  r.cpsnr = cpsnr(pred, truth);
  r.gcpsnr = gcpsnr(pred, truth);
  r.lnmse = ln_mse(pred, truth);
  r.errorRatioCurve = error_pixel_ratio(pred, truth, thresholds);
  return r;
}

std::string report_text(const EvalReport& r) {
  std::ostringstream out;
  out.precision(6);
  out << "metric      value\n";
  out << "CPSNR   " << std::fixed << r.cpsnr << " dB\n";
  out << "G-CPSNR " << std::fixed << r.gcpsnr << " dB\n";
  out.unsetf(std::ios::fixed);
  out << "LN-MSE  " << r.lnmse << "\n";
  return out.str();
}

std::string report_csv(const EvalReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "cpsnr_db,gcpsnr_db,ln_mse\n" << r.cpsnr << "," << r.gcpsnr << "," << r.lnmse << "\n";
  return out.str();
}

std::string curve_csv(const EvalReport& r) {
  std::ostringstream out;
  out.precision(12);
  out << "threshold,error_pixel_ratio\n";
  for (const auto& [t, ratio] : r.errorRatioCurve) out << t << "," << ratio << "\n";
  return out.str();
}

}  // namespace snaphdr::metrics
