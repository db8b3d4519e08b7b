#include "snaphdr/checkpoint.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace snaphdr::autonet {

namespace {

constexpr char kMagic[8] = {'S', 'N', 'H', 'D', 'R', 'C', 'K', 'P'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::ostream& out, std::uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16), static_cast<unsigned char>(v >> 24)};
  out.write(reinterpret_cast<const char*>(b), 4);
}

std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  in.read(reinterpret_cast<char*>(b), 4);
  if (!in) throw std::runtime_error("checkpoint: truncated file");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

void put_f64(std::ostream& out, double v) {
  const std::uint64_t u = std::bit_cast<std::uint64_t>(v);
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(u >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

double get_f64(std::istream& in) {
  unsigned char b[8];
  in.read(reinterpret_cast<char*>(b), 8);
  if (!in) throw std::runtime_error("checkpoint: truncated file");
  std::uint64_t u = 0;
  for (int i = 0; i < 8; ++i) u |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return std::bit_cast<double>(u);
}

}  // namespace

void save_checkpoint(const std::string& path, const std::vector<NamedTensor>& params,
                     const std::string& configEcho) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("checkpoint: cannot open " + path + " for writing");
  out.write(kMagic, 8);
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(configEcho.size()));
  out.write(configEcho.data(), static_cast<std::streamsize>(configEcho.size()));
  put_u32(out, static_cast<std::uint32_t>(params.size()));
  for (const NamedTensor& p : params) {
    put_u32(out, static_cast<std::uint32_t>(p.name.size()));
    out.write(p.name.data(), static_cast<std::streamsize>(p.name.size()));
    put_u32(out, 4);
    const Tensor& t = *p.tensor;
    put_u32(out, static_cast<std::uint32_t>(t.n));
    put_u32(out, static_cast<std::uint32_t>(t.c));
    put_u32(out, static_cast<std::uint32_t>(t.h));
    put_u32(out, static_cast<std::uint32_t>(t.w));
    for (double v : t.v) put_f64(out, v);
  }
  if (!out) throw std::runtime_error("checkpoint: write failed for " + path);
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("checkpoint: cannot open " + path);
  char magic[8];
  in.read(magic, 8);
  if (!in || std::memcmp(magic, kMagic, 8) != 0)
    throw std::runtime_error("checkpoint: bad magic in " + path);
  if (get_u32(in) != kVersion) throw std::runtime_error("checkpoint: unsupported version");

  Checkpoint ckpt;
  const std::uint32_t echoLen = get_u32(in);
  ckpt.configEcho.resize(echoLen);
  in.read(ckpt.configEcho.data(), echoLen);
  if (!in) throw std::runtime_error("checkpoint: truncated file");

  const std::uint32_t count = get_u32(in);
  ckpt.tensors.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) {
    const std::uint32_t nameLen = get_u32(in);
    std::string name(nameLen, '\0');
    in.read(name.data(), nameLen);
    if (get_u32(in) != 4) throw std::runtime_error("checkpoint: unsupported tensor rank");
    const int n = static_cast<int>(get_u32(in));
    const int c = static_cast<int>(get_u32(in));
    const int h = static_cast<int>(get_u32(in));
    const int w = static_cast<int>(get_u32(in));
    Tensor t(n, c, h, w);
    for (double& v : t.v) v = get_f64(in);
    ckpt.tensors.emplace_back(std::move(name), std::move(t));
  }
  return ckpt;
}

void load_into(const Checkpoint& ckpt, const std::vector<NamedTensor>& params) {
  if (ckpt.tensors.size() != params.size())
    throw std::runtime_error("checkpoint: parameter count mismatch");
  for (std::size_t i = 0; i < params.size(); ++i) {
    const auto& [name, tensor] = ckpt.tensors[i];
    if (name != params[i].name)
      throw std::runtime_error("checkpoint: parameter name mismatch: " + name + " vs " +
                               params[i].name);
    if (!tensor.same_shape(*params[i].tensor))
      throw std::runtime_error("checkpoint: shape mismatch for " + name);
    params[i].tensor->v = tensor.v;
  }
}

}  // namespace snaphdr::autonet
