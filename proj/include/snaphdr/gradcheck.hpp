#pragma once

#include <functional>
#include <vector>

#include "snaphdr/tensor.hpp"

namespace snaphdr::autonet {

/// Central finite-difference verification of analytic gradients.
///
/// eval(computeGrad) returns the scalar objective; when computeGrad is true
/// it must also fill the grad buffers of every tensor in `inputs`. Each
/// coordinate is perturbed by +/-h and the analytic derivative compared
/// against (f+ - f-)/(2h) with relative error |a - n| / max(|a|, |n|, 1e-8).
/// Returns the maximum relative error over all coordinates.
double grad_check(const std::function<double(bool)>& eval, const std::vector<Tensor*>& inputs,
                  double h = 1e-4);

}  // namespace snaphdr::autonet
