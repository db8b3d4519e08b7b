#include "snaphdr/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "snaphdr/gradcheck.hpp"
#include "snaphdr/loss.hpp"
#include "snaphdr/optim.hpp"
#include "snaphdr/pipeline.hpp"
#include "snaphdr/radiance.hpp"
#include "snaphdr/rng.hpp"
#include "snaphdr/sim.hpp"
#include "snaphdr/unet.hpp"

namespace snaphdr::selftest {

namespace {

using autonet::Tensor;

void fill_uniform(Tensor& t, Rng& rng, double lo = -1.0, double hi = 1.0) {
  for (double& v : t.v) v = rng.uniform(lo, hi);
}

// values bounded away from zero so ReLU/pooling kinks stay clear of the
// finite-difference step
void fill_signed(Tensor& t, Rng& rng, double minMag = 0.05) {
  for (double& v : t.v) {
    const double mag = rng.uniform(minMag, 1.0);
    v = rng.bernoulli() ? mag : -mag;
  }
}

// reference convolution written as the plain five-nested-loop definition
Tensor naive_conv(const Tensor& x, const Tensor& w, const Tensor& b) {
  const int K = w.h, p = K / 2;
  Tensor out(x.n, w.n, x.h, x.w);
  for (int in = 0; in < x.n; ++in)
    for (int co = 0; co < w.n; ++co)
      for (int y = 0; y < x.h; ++y)
        for (int xx = 0; xx < x.w; ++xx) {
          double acc = b.v[co];
          for (int ci = 0; ci < x.c; ++ci)
            for (int ky = 0; ky < K; ++ky)
              for (int kx = 0; kx < K; ++kx) {
                const int sy = y + ky - p, sx = xx + kx - p;
                if (sy < 0 || sy >= x.h || sx < 0 || sx >= x.w) continue;
                acc += w.at(co, ci, ky, kx) * x.at(in, ci, sy, sx);
              }
          out.at(in, co, y, xx) = acc;
        }
  return out;
}

double weighted_sum(const Tensor& t, const Tensor& r) {
  double s = 0.0;
  for (std::size_t i = 0; i < t.v.size(); ++i) s += t.v[i] * r.v[i];
  return s;
}

CheckResult check(const std::string& name, bool ok, const std::string& detail) {
  return {name, ok, detail};
}

CheckResult bounded(const std::string& name, double value, double bound) {
  std::ostringstream d;
  d << "max rel err " << value << " (bound " << bound << ")";
  return {name, value < bound, d.str()};
}

CheckResult conv_matches_naive() {
  Rng rng(11);
  Tensor x(2, 3, 6, 7), w(4, 3, 3, 3), b(4, 1, 1, 1);
  fill_uniform(x, rng);
  fill_uniform(w, rng);
  fill_uniform(b, rng);
  const Tensor fast = autonet::conv2d_forward(x, w, b);
  const Tensor ref = naive_conv(x, w, b);
  double maxAbs = 0.0;
  for (std::size_t i = 0; i < fast.v.size(); ++i)
    maxAbs = std::max(maxAbs, std::abs(fast.v[i] - ref.v[i]));
  std::ostringstream d;
  d << "max abs diff " << maxAbs;
  return {"conv2d matches naive reference", maxAbs < 1e-12, d.str()};
}

CheckResult conv_gradcheck() {
  Rng rng(12);
  Tensor x(1, 2, 8, 8), w(3, 2, 3, 3), b(3, 1, 1, 1), r(1, 3, 8, 8);
  fill_uniform(x, rng);
  fill_uniform(w, rng);
  fill_uniform(b, rng);
  fill_uniform(r, rng);
  auto eval = [&](bool grad) {
    const Tensor out = autonet::conv2d_forward(x, w, b);
    if (grad) {
      autonet::ConvGrads g = autonet::conv2d_backward(r, x, w, true);
      x.g = g.gradIn.v;
      w.g = g.gradW.v;
      b.g = g.gradB.v;
    }
    return weighted_sum(out, r);
  };
  return bounded("conv2d finite-difference check", autonet::grad_check(eval, {&x, &w, &b}), 1e-4);
}

CheckResult elementwise_op_gradchecks() {
  Rng rng(13);
  double worst = 0.0;

  {  // relu
    Tensor x(1, 2, 5, 6), r(1, 2, 5, 6);
    fill_signed(x, rng);
    fill_uniform(r, rng);
    auto eval = [&](bool grad) {
      const Tensor out = autonet::relu_forward(x);
      if (grad) x.g = autonet::relu_backward(r, out).v;
      return weighted_sum(out, r);
    };
    worst = std::max(worst, autonet::grad_check(eval, {&x}));
  }
  {  // maxpool2
    Tensor x(1, 2, 6, 6), r(1, 2, 3, 3);
    fill_signed(x, rng);
    fill_uniform(r, rng);
    auto eval = [&](bool grad) {
      autonet::Pool2Result p = autonet::maxpool2_forward(x);
      if (grad) x.g = autonet::maxpool2_backward(r, p, x.h, x.w).v;
      return weighted_sum(p.out, r);
    };
    worst = std::max(worst, autonet::grad_check(eval, {&x}));
  }
  for (auto mode : {autonet::UpsampleMode::Nearest, autonet::UpsampleMode::Bilinear}) {
    Tensor x(1, 2, 3, 4), r(1, 2, 6, 8);
    fill_uniform(x, rng);
    fill_uniform(r, rng);
    auto eval = [&](bool grad) {
      const Tensor out = autonet::upsample2_forward(x, mode);
      if (grad) x.g = autonet::upsample2_backward(r, mode, x.h, x.w).v;
      return weighted_sum(out, r);
    };
    worst = std::max(worst, autonet::grad_check(eval, {&x}));
  }
  {  // concat
    Tensor a(1, 2, 4, 4), b(1, 3, 4, 4), r(1, 5, 4, 4);
    fill_uniform(a, rng);
    fill_uniform(b, rng);
    fill_uniform(r, rng);
    auto eval = [&](bool grad) {
      const Tensor out = autonet::concat_forward(a, b);
      if (grad) {
        Tensor ga, gb;
        autonet::concat_backward(r, a.c, ga, gb);
        a.g = ga.v;
        b.g = gb.v;
      }
      return weighted_sum(out, r);
    };
    worst = std::max(worst, autonet::grad_check(eval, {&a, &b}));
  }
  return bounded("relu/maxpool2/upsample2/concat finite-difference checks", worst, 1e-4);
}

CheckResult unet_gradcheck() {
  autonet::UNetConfig cfg;
  cfg.depth = 2;
  cfg.baseChannels = 3;
  cfg.sparseInChannels = 2;
  cfg.denseInChannels = 2;
  cfg.outChannels = 2;
  autonet::UNet net(cfg);
  net.init(21);

  Rng rng(22);
  Tensor sparse(1, 2, 8, 8), dense(1, 2, 8, 8), r(1, 2, 8, 8);
  fill_signed(sparse, rng);
  fill_signed(dense, rng);
  fill_uniform(r, rng);

  std::vector<Tensor*> inputs{&sparse, &dense};
  for (autonet::NamedTensor& p : net.params()) inputs.push_back(p.tensor);

  auto eval = [&](bool grad) {
    const Tensor& out = net.forward(sparse, dense);
    if (grad) {
      net.zero_grad();
      Tensor gs, gd;
      net.backward(r, &gs, &gd);
      sparse.g = gs.v;
      dense.g = gd.v;
    }
    return weighted_sum(out, r);
  };
  return bounded("depth-2 toy U-Net finite-difference check (params + inputs)",
                 autonet::grad_check(eval, inputs), 1e-4);
}

CheckResult adaptation_gradcheck() {
  // the adaptation block alone: depth-1 net degenerates to adaptation + convs
  autonet::UNetConfig cfg;
  cfg.depth = 1;
  cfg.baseChannels = 2;
  cfg.sparseInChannels = 3;
  cfg.denseInChannels = 3;
  cfg.outChannels = 1;
  autonet::UNet net(cfg);
  net.init(31);

  Rng rng(32);
  Tensor sparse(1, 3, 6, 6), dense(1, 3, 6, 6), r(1, 1, 6, 6);
  fill_signed(sparse, rng);
  fill_signed(dense, rng);
  fill_uniform(r, rng);
  std::vector<Tensor*> inputs{&sparse, &dense};
  for (autonet::NamedTensor& p : net.params()) inputs.push_back(p.tensor);
  auto eval = [&](bool grad) {
    const Tensor& out = net.forward(sparse, dense);
    if (grad) {
      net.zero_grad();
      Tensor gs, gd;
      net.backward(r, &gs, &gd);
      sparse.g = gs.v;
      dense.g = gd.v;
    }
    return weighted_sum(out, r);
  };
  return bounded("RAW adaptation block finite-difference check",
                 autonet::grad_check(eval, inputs), 1e-4);
}

CheckResult loss_gradchecks() {
  Rng rng(41);
  double worst = 0.0;
  {
    Tensor pred(2, 3, 6, 6), target(2, 3, 6, 6);
    fill_uniform(pred, rng);
    fill_uniform(target, rng);
    auto eval = [&](bool grad) {
      autonet::LossResult r = autonet::loss_ldr(pred, target, 1.0);
      if (grad) pred.g = r.grad.v;
      return r.value;
    };
    worst = std::max(worst, autonet::grad_check(eval, {&pred}));
  }
  {
    Tensor pred(1, 3, 6, 6), target(1, 3, 6, 6), lum(1, 1, 6, 6);
    fill_uniform(pred, rng);
    fill_uniform(target, rng);
    fill_uniform(lum, rng, 0.2, 2.0);
    auto eval = [&](bool grad) {
      autonet::LossResult r = autonet::loss_linear_hdr(pred, lum, target, 1.0);
      if (grad) pred.g = r.grad.v;
      return r.value;
    };
    worst = std::max(worst, autonet::grad_check(eval, {&pred}));
  }
  return bounded("loss finite-difference checks", worst, 1e-4);
}

CheckResult loss_direct_reference() {
  Rng rng(42);
  Tensor pred(1, 2, 5, 5), target(1, 2, 5, 5);
  fill_uniform(pred, rng);
  fill_uniform(target, rng);
  double direct = 0.0;
  for (std::size_t i = 0; i < pred.v.size(); ++i) {
    const double d = pred.v[i] - target.v[i];
    direct += d * d;
  }
  const double got = autonet::loss_ldr(pred, target, 0.0).value;
  std::ostringstream d;
  d << "|" << got << " - " << direct << "|";
  return {"loss with lambda=0 equals plain sum of squares", std::abs(got - direct) < 1e-12,
          d.str()};
}

CheckResult gradcheck_negative_control() {
  // a deliberately broken backward must be flagged
  Rng rng(43);
  Tensor x(1, 1, 4, 4), r(1, 1, 4, 4);
  fill_uniform(x, rng, 0.5, 1.5);
  fill_uniform(r, rng, 0.5, 1.5);
  auto eval = [&](bool grad) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.v.size(); ++i) s += x.v[i] * x.v[i] * r.v[i];
    if (grad) {
      x.zero_grad();
      for (std::size_t i = 0; i < x.v.size(); ++i) x.g[i] = x.v[i] * r.v[i];  // missing factor 2
    }
    return s;
  };
  const double err = autonet::grad_check(eval, {&x});
  std::ostringstream d;
  d << "reported rel err " << err;
  return {"gradient checker detects a broken backward", err > 1e-2, d.str()};
}

CheckResult adam_scalar_reference() {
  Tensor wT(1, 1, 1, 1);
  wT.v[0] = 1.0;
  std::vector<autonet::NamedTensor> params{{"w", &wT}};
  autonet::AdamConfig cfg{0.1, 0.9, 0.999, 1e-8};
  autonet::AdamState adam(params, cfg);

  // hand-evaluated first step on f(w) = w^2
  const double g = 2.0;
  const double m = 0.1 * g, v = 0.001 * g * g;
  const double mHat = m / (1.0 - 0.9), vHat = v / (1.0 - 0.999);
  const double expected = 1.0 - 0.1 * mHat / (std::sqrt(vHat) + 1e-8);

  wT.zero_grad();
  wT.g[0] = 2.0 * wT.v[0];
  adam.step(params);
  std::ostringstream d;
  d << "got " << wT.v[0] << ", expected " << expected;
  return {"adam matches the scalar reference step", std::abs(wT.v[0] - expected) < 1e-12, d.str()};
}

// O/U correction against the clip-free irradiance of an affine ramp scene.
// The ramp is chosen so the interior window contains both saturated
// highest-exposure sites and blacked-out lowest-exposure sites.
CheckResult ou_ramp_oracle() {
  const int N = 64;
  const MosaicPattern pattern = MosaicPattern::bayer_default();
  const ExposureSpec spec;
  auto ramp = [](int y, int x) { return 0.0001 + 0.0006 * (x + y); };

  Plane raw(N, N, 1);
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x) {
      const double rho = spec.rho[pattern.site_at(y, x).exposure];
      raw.at(y, x) = std::min(1.0, rho * ramp(y, x));  // clip, no quantization
    }

  IrradianceStack corrected = ou_correct(to_irradiance_stack(submosaic(raw, pattern), pattern, spec), spec);
  // interior window: inside every channel's sample hull, where bilinear
  // interpolation reproduces affine ramps exactly
  double maxErr = 0.0;
  int over = 0, under = 0;
  for (int y = 4; y < N - 4; ++y)
    for (int x = 4; x < N - 4; ++x) {
      const int ch = (y % 4) * 4 + (x % 4);
      const double rho = spec.rho[pattern.cell[ch].exposure];
      const OuThresholds tau = ou_thresholds(rho, spec.deltaT);
      const double xi = std::min(1.0, rho * ramp(y, x)) / rho;
      if (xi > tau.tauO) ++over;
      if (xi < tau.tauU) ++under;
      maxErr = std::max(maxErr, std::abs(corrected.stack.planes.at(y, x, ch) - ramp(y, x)));
    }
  std::ostringstream d;
  d << "max abs err " << maxErr << " over interior (" << over << " over, " << under
    << " under sites)";
  return {"O/U correction matches the clip-free ramp oracle",
          maxErr < 1e-9 && over > 0 && under > 0, d.str()};
}

// Debevec merge against the per-pixel weighted quantization bound.
CheckResult debevec_bound_oracle() {
  const int N = 32;
  const SimConfig sim;
  const ExposureSpec spec;
  const WeightFn w = WeightFn::hat();
  Rng rng(51);

  // unclipped at every scale and nonzero at the lowest
  Plane hdr(N, N, 3);
  const double lo = 1.0 / 255.0, hi = (1.0 - 0.5 / 255.0) / 16.0 * 0.999;
  for (double& v : hdr.data) v = rng.uniform(lo, hi);

  std::vector<Plane> ldr;
  for (double s : sim.exposureScales) ldr.push_back(expose(hdr, s, sim.bitDepth));
  Plane merged = debevec_merge(ldr, spec, w);

  int violations = 0;
  double worstMargin = 1e300;
  for (int y = 0; y < N; ++y)
    for (int x = 0; x < N; ++x)
      for (int c = 0; c < 3; ++c) {
        double num = 0.0, den = 0.0;
        for (std::size_t k = 0; k < spec.rho.size(); ++k) {
          const double wk = w(ldr[k].at(y, x, c));
          num += wk * 0.5 / (255.0 * spec.rho[k]);
          den += wk;
        }
        const double bound = num / den + 1e-12;
        const double err = std::abs(merged.at(y, x, c) - hdr.at(y, x, c));
        if (err > bound) ++violations;
        worstMargin = std::min(worstMargin, bound - err);
      }
  std::ostringstream d;
  d << violations << " violations, worst margin " << worstMargin;
  return {"debevec merge within the weighted quantization bound", violations == 0, d.str()};
}

CheckResult irradiance_roundtrip_bound() {
  const int N = 24;
  const SimConfig sim;
  Rng rng(52);
  Plane hdr(N, N, 3);
  for (double& v : hdr.data) v = rng.uniform(1e-4, (1.0 - 0.5 / 255.0) / 16.0 * 0.999);

  int violations = 0;
  for (std::size_t k = 0; k < sim.exposureScales.size(); ++k) {
    const double rho = sim.exposureScales[k];
    const Plane z = expose(hdr, rho, sim.bitDepth);
    const Plane xi = to_irradiance(z, rho, 1.0);
    const double bound = 0.5 / (255.0 * rho) + 1e-15;
    for (std::size_t i = 0; i < xi.data.size(); ++i)
      if (std::abs(xi.data[i] - hdr.data[i]) > bound) ++violations;
  }
  std::ostringstream d;
  d << violations << " violations";
  return {"to_irradiance of unclipped exposures recovers E within 0.5/(255 rho)", violations == 0,
          d.str()};
}

CheckResult gradient_linearity() {
  Rng rng(53);
  Plane u(7, 9, 2), v(7, 9, 2);
  for (double& x : u.data) x = rng.uniform(-1, 1);
  for (double& x : v.data) x = rng.uniform(-1, 1);
  const double a = 1.7, b = -0.6;
  Plane mix(7, 9, 2);
  for (std::size_t i = 0; i < mix.data.size(); ++i) mix.data[i] = a * u.data[i] + b * v.data[i];
  const Gradient gm = gradient(mix), gu = gradient(u), gv = gradient(v);
  double maxErr = 0.0;
  for (std::size_t i = 0; i < gm.dx.data.size(); ++i) {
    maxErr = std::max(maxErr, std::abs(gm.dx.data[i] - (a * gu.dx.data[i] + b * gv.dx.data[i])));
    maxErr = std::max(maxErr, std::abs(gm.dy.data[i] - (a * gu.dy.data[i] + b * gv.dy.data[i])));
  }
  std::ostringstream d;
  d << "max abs err " << maxErr;
  return {"derivative operator is linear", maxErr < 1e-12, d.str()};
}

}  // namespace

std::vector<CheckResult> run_checks() {
  std::vector<CheckResult> results;
  results.push_back(conv_matches_naive());
  results.push_back(conv_gradcheck());
  results.push_back(elementwise_op_gradchecks());
  results.push_back(adaptation_gradcheck());
  results.push_back(unet_gradcheck());
  results.push_back(loss_gradchecks());
  results.push_back(loss_direct_reference());
  results.push_back(gradcheck_negative_control());
  results.push_back(adam_scalar_reference());
  results.push_back(gradient_linearity());
  results.push_back(ou_ramp_oracle());
  results.push_back(debevec_bound_oracle());
  results.push_back(irradiance_roundtrip_bound());
  return results;
}

int run(std::ostream& out) {
  int failures = 0;
  for (const CheckResult& r : run_checks()) {
    out << (r.passed ? "ok   " : "FAIL ") << r.name << " — " << r.detail << "\n";
    if (!r.passed) ++failures;
  }
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures;
}

}  // namespace snaphdr::selftest
