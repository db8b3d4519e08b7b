#pragma once

#include <string>
#include <utility>
#include <vector>

#include "snaphdr/tensor.hpp"

namespace snaphdr::autonet {

/// Versioned binary container of named parameter tensors plus a key=value
/// config echo. All integers and doubles are little-endian; see
/// docs/formats.md for the byte layout.
void save_checkpoint(const std::string& path, const std::vector<NamedTensor>& params,
                     const std::string& configEcho);

struct Checkpoint {
  std::string configEcho;
  std::vector<std::pair<std::string, Tensor>> tensors;
};

Checkpoint load_checkpoint(const std::string& path);

/// Copies checkpoint tensors into the parameter list; names and shapes must
/// match exactly.
void load_into(const Checkpoint& ckpt, const std::vector<NamedTensor>& params);

}  // namespace snaphdr::autonet
