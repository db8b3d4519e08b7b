#include "snaphdr/hdrio.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace snaphdr::hdrio {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw std::runtime_error(path + ": " + what);
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  return out;
}

// ---- RGBE ----------------------------------------------------------------

std::array<unsigned char, 4> float_to_rgbe(double r, double g, double b) {
  const double maxC = std::max({r, g, b});
  if (maxC < 1e-38) return {0, 0, 0, 0};
  int e;
  const double mant = std::frexp(maxC, &e);
  const double scale = mant * 256.0 / maxC;
  auto enc = [&](double v) {
    return static_cast<unsigned char>(std::min(255.0, std::floor(v * scale + 0.5)));
  };
  return {enc(r), enc(g), enc(b), static_cast<unsigned char>(e + 128)};
}

void rgbe_to_float(const unsigned char rgbe[4], double& r, double& g, double& b) {
  if (rgbe[3] == 0) {
    r = g = b = 0.0;
    return;
  }
  const double f = std::ldexp(1.0, static_cast<int>(rgbe[3]) - (128 + 8));
  r = rgbe[0] * f;
  g = rgbe[1] * f;
  b = rgbe[2] * f;
}

void decode_flat_pixels(std::istream& in, const std::string& path, Plane& img, int y, int x0,
                        unsigned char prev[4]) {
  // flat RGBE quadruples with old-style repeat codes (1,1,1,count)
  int x = x0;
  int shift = 0;
  while (x < img.width) {
    unsigned char px[4];
    in.read(reinterpret_cast<char*>(px), 4);
    if (!in) fail(path, "truncated scanline");
    if (px[0] == 1 && px[1] == 1 && px[2] == 1) {
      const int count = px[3] << shift;
      for (int i = 0; i < count; ++i) {
        if (x >= img.width) fail(path, "repeat overruns scanline");
        double r, g, b;
        rgbe_to_float(prev, r, g, b);
        img.at(y, x, 0) = r;
        img.at(y, x, 1) = g;
        img.at(y, x, 2) = b;
        ++x;
      }
      shift += 8;
      continue;
    }
    shift = 0;
    std::memcpy(prev, px, 4);
    double r, g, b;
    rgbe_to_float(px, r, g, b);
    img.at(y, x, 0) = r;
    img.at(y, x, 1) = g;
    img.at(y, x, 2) = b;
    ++x;
  }
}

}  // namespace

Plane read_hdr(const std::string& path) {
  std::ifstream in = open_in(path);

  std::string line;
  if (!std::getline(in, line)) fail(path, "empty file");
  if (line.rfind("#?", 0) != 0) fail(path, "bad magic (expected #?RADIANCE or #?RGBE)");

  bool formatOk = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) break;
    if (line[0] == '#') continue;
    if (line.rfind("FORMAT=", 0) == 0) {
      if (line != "FORMAT=32-bit_rle_rgbe") fail(path, "unsupported format: " + line);
      formatOk = true;
    }
    // EXPOSURE and other informational headers are accepted and ignored
  }
  if (!formatOk) fail(path, "missing FORMAT=32-bit_rle_rgbe header");

  if (!std::getline(in, line)) fail(path, "missing resolution line");
  int width = 0, height = 0;
  {
    std::istringstream res(line);
    std::string ytag, xtag;
    if (!(res >> ytag >> height >> xtag >> width) || ytag != "-Y" || xtag != "+X")
      fail(path, "unsupported pixel order: " + line);
  }
  if (width <= 0 || height <= 0) fail(path, "bad resolution");

  Plane img(height, width, 3);
  std::vector<unsigned char> scan(static_cast<std::size_t>(width) * 4);
  for (int y = 0; y < height; ++y) {
    unsigned char head[4];
    in.read(reinterpret_cast<char*>(head), 4);
    if (!in) fail(path, "truncated scanline");
    const bool rle = head[0] == 2 && head[1] == 2 && ((head[2] << 8) | head[3]) == width &&
                     width >= 8 && width <= 32767;
    if (!rle) {
      // not an RLE header: the four bytes are the first flat pixel
      double r, g, b;
      if (head[0] == 1 && head[1] == 1 && head[2] == 1) fail(path, "repeat code before any pixel");
      rgbe_to_float(head, r, g, b);
      img.at(y, 0, 0) = r;
      img.at(y, 0, 1) = g;
      img.at(y, 0, 2) = b;
      unsigned char prev[4];
      std::memcpy(prev, head, 4);
      decode_flat_pixels(in, path, img, y, 1, prev);
      continue;
    }
    for (int comp = 0; comp < 4; ++comp) {
      int x = 0;
      while (x < width) {
        unsigned char code;
        in.read(reinterpret_cast<char*>(&code), 1);
        if (!in) fail(path, "truncated scanline");
        if (code > 128) {  // run
          const int count = code - 128;
          unsigned char value;
          in.read(reinterpret_cast<char*>(&value), 1);
          if (!in || x + count > width) fail(path, "bad scanline run");
          for (int i = 0; i < count; ++i) scan[(x + i) * 4 + comp] = value;
          x += count;
        } else {  // literals
          const int count = code;
          if (count == 0 || x + count > width) fail(path, "bad scanline literal");
          for (int i = 0; i < count; ++i) {
            unsigned char value;
            in.read(reinterpret_cast<char*>(&value), 1);
            if (!in) fail(path, "truncated scanline");
            scan[(x + i) * 4 + comp] = value;
          }
          x += count;
        }
      }
    }
    for (int x = 0; x < width; ++x) {
      double r, g, b;
      rgbe_to_float(&scan[x * 4], r, g, b);
      img.at(y, x, 0) = r;
      img.at(y, x, 1) = g;
      img.at(y, x, 2) = b;
    }
  }
  return img;
}

void write_hdr(const Plane& img, const std::string& path) {
  if (img.channels != 3) throw std::invalid_argument("write_hdr: need 3 channels");
  for (double v : img.data)
    if (!std::isfinite(v) || v < 0.0)
      throw std::invalid_argument("write_hdr: values must be finite and nonnegative");

  std::ofstream out = open_out(path);
  out << "#?RADIANCE\n";
  out << "FORMAT=32-bit_rle_rgbe\n";
  out << "\n";
  out << "-Y " << img.height << " +X " << img.width << "\n";

  const int W = img.width;
  const bool rle = W >= 8 && W <= 32767;
  std::vector<unsigned char> scan(static_cast<std::size_t>(W) * 4);
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < W; ++x) {
      const auto rgbe = float_to_rgbe(img.at(y, x, 0), img.at(y, x, 1), img.at(y, x, 2));
      std::copy(rgbe.begin(), rgbe.end(), &scan[x * 4]);
    }
    if (!rle) {
      out.write(reinterpret_cast<const char*>(scan.data()), W * 4);
      continue;
    }
    const unsigned char head[4] = {2, 2, static_cast<unsigned char>(W >> 8),
                                   static_cast<unsigned char>(W & 0xff)};
    out.write(reinterpret_cast<const char*>(head), 4);
    for (int comp = 0; comp < 4; ++comp) {
      int x = 0;
      while (x < W) {
        // find the next run of at least 4 equal bytes
        int runStart = x;
        int runLen = 0;
        while (runStart < W) {
          runLen = 1;
          while (runStart + runLen < W && runLen < 127 &&
                 scan[(runStart + runLen) * 4 + comp] == scan[runStart * 4 + comp])
            ++runLen;
          if (runLen >= 4) break;
          runStart += runLen;
        }
        if (runStart + runLen > W || runLen < 4) runStart = W;
        // literals up to the run
        int lit = runStart - x;
        while (lit > 0) {
          const int chunk = std::min(lit, 128);
          out.put(static_cast<char>(chunk));
          for (int i = 0; i < chunk; ++i) out.put(static_cast<char>(scan[(x + i) * 4 + comp]));
          x += chunk;
          lit -= chunk;
        }
        if (runStart < W) {
          out.put(static_cast<char>(128 + runLen));
          out.put(static_cast<char>(scan[runStart * 4 + comp]));
          x = runStart + runLen;
        }
      }
    }
  }
  if (!out) fail(path, "write failed");
}

// ---- PFM -------------------------------------------------------------------

namespace {

bool host_little_endian() {
  const std::uint16_t one = 1;
  return *reinterpret_cast<const unsigned char*>(&one) == 1;
}

float swap_float(float f) {
  std::uint32_t u;
  std::memcpy(&u, &f, 4);
  u = ((u & 0xff000000u) >> 24) | ((u & 0x00ff0000u) >> 8) | ((u & 0x0000ff00u) << 8) |
      ((u & 0x000000ffu) << 24);
  std::memcpy(&f, &u, 4);
  return f;
}

}  // namespace

Plane read_pfm(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string tag;
  int width = 0, height = 0;
  double scale = 0.0;
  in >> tag >> width >> height >> scale;
  if (!in || (tag != "PF" && tag != "Pf")) fail(path, "malformed PFM header");
  if (width <= 0 || height <= 0 || width > 1 << 20 || height > 1 << 20)
    fail(path, "bad PFM dimensions");
  if (scale == 0.0) fail(path, "bad PFM scale");
  in.get();  // single whitespace after the scale line

  const int channels = tag == "PF" ? 3 : 1;
  const bool fileLittle = scale < 0.0;
  Plane img(height, width, channels);
  std::vector<float> row(static_cast<std::size_t>(width) * channels);
  // PFM stores rows bottom-to-top
  for (int y = height - 1; y >= 0; --y) {
    in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size() * 4));
    if (!in) fail(path, "truncated PFM data");
    for (std::size_t i = 0; i < row.size(); ++i) {
      float f = row[i];
      if (fileLittle != host_little_endian()) f = swap_float(f);
      img.data[static_cast<std::size_t>(y) * width * channels + i] = f;
    }
  }
  return img;
}

void write_pfm(const Plane& img, const std::string& path) {
  if (img.channels != 1 && img.channels != 3)
    throw std::invalid_argument("write_pfm: need 1 or 3 channels");
  std::ofstream out = open_out(path);
  out << (img.channels == 3 ? "PF" : "Pf") << "\n" << img.width << " " << img.height << "\n";
  out << (host_little_endian() ? "-1.0" : "1.0") << "\n";
  std::vector<float> row(static_cast<std::size_t>(img.width) * img.channels);
  for (int y = img.height - 1; y >= 0; --y) {
    for (std::size_t i = 0; i < row.size(); ++i)
      row[i] = static_cast<float>(img.data[static_cast<std::size_t>(y) * row.size() + i]);
    out.write(reinterpret_cast<const char*>(row.data()),
              static_cast<std::streamsize>(row.size() * 4));
  }
  if (!out) fail(path, "write failed");
}

// ---- PPM / PGM ---------------------------------------------------------------

namespace {

int read_pnm_header(std::ifstream& in, const std::string& path, const std::string& magic,
                    int& width, int& height) {
  std::string tag;
  int maxval = 0;
  in >> tag;
  if (tag != magic) fail(path, "malformed header (expected " + magic + ")");
  auto next_int = [&](int& v) {
    // skip whitespace and # comments
    while (true) {
      const int ch = in.peek();
      if (ch == '#') {
        std::string comment;
        std::getline(in, comment);
      } else if (std::isspace(ch)) {
        in.get();
      } else {
        break;
      }
    }
    if (!(in >> v)) fail(path, "malformed header");
  };
  next_int(width);
  next_int(height);
  next_int(maxval);
  if (width <= 0 || height <= 0 || width > 1 << 20 || height > 1 << 20)
    fail(path, "bad dimensions");
  if (maxval <= 0 || maxval > 65535) fail(path, "bad maxval");
  in.get();  // single whitespace before binary data
  return maxval;
}

}  // namespace

Plane read_ppm(const std::string& path) {
  std::ifstream in = open_in(path);
  int width, height;
  const int maxval = read_pnm_header(in, path, "P6", width, height);
  if (maxval != 255) fail(path, "only 8-bit PPM supported");
  Plane img(height, width, 3);
  std::vector<unsigned char> row(static_cast<std::size_t>(width) * 3);
  for (int y = 0; y < height; ++y) {
    in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size()));
    if (!in) fail(path, "truncated data");
    for (std::size_t i = 0; i < row.size(); ++i)
      img.data[static_cast<std::size_t>(y) * row.size() + i] = row[i] / 255.0;
  }
  return img;
}

void write_ppm(const Plane& img, const std::string& path, double gamma) {
  if (img.channels != 3) throw std::invalid_argument("write_ppm: need 3 channels");
  std::ofstream out = open_out(path);
  out << "P6\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> row(static_cast<std::size_t>(img.width) * 3);
  for (int y = 0; y < img.height; ++y) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const double lin = std::clamp(img.data[static_cast<std::size_t>(y) * row.size() + i], 0.0, 1.0);
      row[i] = static_cast<unsigned char>(std::lround(255.0 * std::pow(lin, 1.0 / gamma)));
    }
    out.write(reinterpret_cast<const char*>(row.data()), static_cast<std::streamsize>(row.size()));
  }
  if (!out) fail(path, "write failed");
}

Plane read_pgm(const std::string& path) {
  std::ifstream in = open_in(path);
  int width, height;
  const int maxval = read_pnm_header(in, path, "P5", width, height);
  const bool wide = maxval > 255;
  Plane img(height, width, 1);
  std::vector<unsigned char> row(static_cast<std::size_t>(width) * (wide ? 2 : 1));
  for (int y = 0; y < height; ++y) {
    in.read(reinterpret_cast<char*>(row.data()), static_cast<std::streamsize>(row.size()));
    if (!in) fail(path, "truncated data");
    for (int x = 0; x < width; ++x) {
      const int v = wide ? (row[2 * x] << 8) | row[2 * x + 1] : row[x];
      img.at(y, x) = static_cast<double>(v) / maxval;
    }
  }
  return img;
}

void write_pgm(const Plane& img, const std::string& path, int bitDepth) {
  if (img.channels != 1) throw std::invalid_argument("write_pgm: need 1 channel");
  if (bitDepth < 1 || bitDepth > 16) throw std::invalid_argument("write_pgm: bitDepth in [1,16]");
  const int maxval = (1 << bitDepth) - 1;
  const bool wide = maxval > 255;
  std::ofstream out = open_out(path);
  out << "P5\n" << img.width << " " << img.height << "\n" << maxval << "\n";
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      const long v = std::lround(std::clamp(img.at(y, x), 0.0, 1.0) * maxval);
      if (wide) {
        out.put(static_cast<char>(v >> 8));
        out.put(static_cast<char>(v & 0xff));
      } else {
        out.put(static_cast<char>(v));
      }
    }
  }
  if (!out) fail(path, "write failed");
}

}  // namespace snaphdr::hdrio
