#include "chaoswm/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

std::uint8_t to_pixel(double v) {
  return static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
}

// Bilinear sample of a float raster; neighbours outside the frame are 0.
double sample_nearest(const std::vector<double>& src, std::size_t w, std::size_t h, double sx,
                      double sy) {
  const long ix = std::lround(sx);
  const long iy = std::lround(sy);
  if (ix < 0 || iy < 0 || ix >= static_cast<long>(w) || iy >= static_cast<long>(h)) return 0.0;
  return src[static_cast<std::size_t>(iy) * w + static_cast<std::size_t>(ix)];
}

double sample_bilinear(const std::vector<double>& src, std::size_t w, std::size_t h, double sx,
                       double sy) {
  const double fx = std::floor(sx);
  const double fy = std::floor(sy);
  const double ax = sx - fx;
  const double ay = sy - fy;
  const auto ix = static_cast<long>(fx);
  const auto iy = static_cast<long>(fy);
  auto at = [&](long x, long y) -> double {
    if (x < 0 || y < 0 || x >= static_cast<long>(w) || y >= static_cast<long>(h)) return 0.0;
    return src[static_cast<std::size_t>(y) * w + static_cast<std::size_t>(x)];
  };
  const double top = at(ix, iy) * (1.0 - ax) + at(ix + 1, iy) * ax;
  const double bottom = at(ix, iy + 1) * (1.0 - ax) + at(ix + 1, iy + 1) * ax;
  return top * (1.0 - ay) + bottom * ay;
}

std::vector<double> rotate(const std::vector<double>& src, std::size_t w, std::size_t h,
                           double theta, Interpolation interpolation) {
  const double cx = (static_cast<double>(w) - 1.0) / 2.0;
  const double cy = (static_cast<double>(h) - 1.0) / 2.0;
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  std::vector<double> out(w * h);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      // Inverse map: the output pixel takes the source point rotated back by theta.
      const double dx = static_cast<double>(x) - cx;
      const double dy = static_cast<double>(y) - cy;
      const double sx = c * dx + s * dy + cx;
      const double sy = -s * dx + c * dy + cy;
      out[y * w + x] = interpolation == Interpolation::kNearest
                           ? sample_nearest(src, w, h, sx, sy)
                           : sample_bilinear(src, w, h, sx, sy);
    }
  }
  return out;
}

// Orthonormal DCT-II basis: kBasis[u][x] = C(u) cos((2x + 1) u pi / 16).
const std::array<std::array<double, 8>, 8>& dct_basis() {
  static const auto basis = [] {
    std::array<std::array<double, 8>, 8> b{};
    for (int u = 0; u < 8; ++u) {
      const double cu = u == 0 ? std::sqrt(1.0 / 8.0) : std::sqrt(2.0 / 8.0);
      for (int x = 0; x < 8; ++x) {
        b[u][x] = cu * std::cos((2.0 * x + 1.0) * u * std::numbers::pi / 16.0);
      }
    }
    return b;
  }();
  return basis;
}

using Block = std::array<double, 64>;

Block forward_dct(const Block& in) {
  const auto& b = dct_basis();
  Block tmp{}, out{};
  for (int y = 0; y < 8; ++y)
    for (int u = 0; u < 8; ++u) {
      double acc = 0.0;
      for (int x = 0; x < 8; ++x) acc += b[u][x] * in[y * 8 + x];
      tmp[y * 8 + u] = acc;
    }
  for (int v = 0; v < 8; ++v)
    for (int u = 0; u < 8; ++u) {
      double acc = 0.0;
      for (int y = 0; y < 8; ++y) acc += b[v][y] * tmp[y * 8 + u];
      out[v * 8 + u] = acc;
    }
  return out;
}

Block inverse_dct(const Block& in) {
  const auto& b = dct_basis();
  Block tmp{}, out{};
  for (int v = 0; v < 8; ++v)
    for (int x = 0; x < 8; ++x) {
      double acc = 0.0;
      for (int u = 0; u < 8; ++u) acc += b[u][x] * in[v * 8 + u];
      tmp[v * 8 + x] = acc;
    }
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x) {
      double acc = 0.0;
      for (int v = 0; v < 8; ++v) acc += b[v][y] * tmp[v * 8 + x];
      out[y * 8 + x] = acc;
    }
  return out;
}

}  // namespace

std::string_view to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::kCrop:
      return "crop";
    case AttackKind::kRotation:
      return "rotation";
    case AttackKind::kJpeg:
      return "jpeg";
    case AttackKind::kGaussian:
      return "gaussian";
  }
  return "unknown";
}

AttackKind parse_attack_kind(std::string_view name) {
  if (name == "crop") return AttackKind::kCrop;
  if (name == "rotation") return AttackKind::kRotation;
  if (name == "jpeg") return AttackKind::kJpeg;
  if (name == "gaussian") return AttackKind::kGaussian;
  throw DomainError("unknown attack '" + std::string(name) + "'");
}

GrayImage crop_attack(const GrayImage& img, std::size_t size, std::size_t x0, std::size_t y0) {
  GrayImage out = img;
  const auto x1 = std::min(img.width(), x0 + std::min(size, img.width()));
  const auto y1 = std::min(img.height(), y0 + std::min(size, img.height()));
  for (std::size_t y = y0; y < y1; ++y)
    for (std::size_t x = x0; x < x1; ++x) out(x, y) = 0;
  return out;
}

GrayImage rotation_attack(const GrayImage& img, double theta_degrees,
                          Interpolation interpolation) {
  if (theta_degrees == 0.0) return img;
  const double theta = theta_degrees * std::numbers::pi / 180.0;
  const auto w = img.width();
  const auto h = img.height();
  std::vector<double> src(img.pixels().begin(), img.pixels().end());
  const auto back = rotate(rotate(src, w, h, theta, interpolation), w, h, -theta, interpolation);
  GrayImage out(w, h);
  for (std::size_t i = 0; i < back.size(); ++i) out.pixels()[i] = to_pixel(back[i]);
  return out;
}

const std::array<int, 64>& jpeg_luminance_table() {
  static const std::array<int, 64> table = {
      16, 11, 10, 16, 24,  40,  51,  61,   //
      12, 12, 14, 19, 26,  58,  60,  55,   //
      14, 13, 16, 24, 40,  57,  69,  56,   //
      14, 17, 22, 29, 51,  87,  80,  62,   //
      18, 22, 37, 56, 68,  109, 103, 77,   //
      24, 35, 55, 64, 81,  104, 113, 92,   //
      49, 64, 78, 87, 103, 121, 120, 101,  //
      72, 92, 95, 98, 112, 100, 103, 99};
  return table;
}

std::array<int, 64> jpeg_quantization_table(int level) {
  if (level < 1) throw DomainError("JPEG compression level must be >= 1");
  std::array<int, 64> q{};
  const auto& base = jpeg_luminance_table();
  for (std::size_t i = 0; i < 64; ++i) {
    q[i] = std::max(1, (base[i] * 2 * level + 50) / 100);
  }
  return q;
}

GrayImage jpeg_attack(const GrayImage& img, int level) {
  const auto q = jpeg_quantization_table(level);
  const auto w = img.width();
  const auto h = img.height();
  GrayImage out(w, h);
  for (std::size_t by = 0; by < h; by += 8) {
    for (std::size_t bx = 0; bx < w; bx += 8) {
      Block block{};
      for (std::size_t y = 0; y < 8; ++y)
        for (std::size_t x = 0; x < 8; ++x) {
          const auto sx = std::min(bx + x, w - 1);
          const auto sy = std::min(by + y, h - 1);
          block[y * 8 + x] = static_cast<double>(img(sx, sy)) - 128.0;
        }
      Block coeffs = forward_dct(block);
      for (std::size_t i = 0; i < 64; ++i) coeffs[i] = std::round(coeffs[i] / q[i]) * q[i];
      const Block rec = inverse_dct(coeffs);
      for (std::size_t y = 0; y < 8 && by + y < h; ++y)
        for (std::size_t x = 0; x < 8 && bx + x < w; ++x)
          out(bx + x, by + y) = to_pixel(rec[y * 8 + x] + 128.0);
    }
  }
  return out;
}

GrayImage gaussian_attack(const GrayImage& img, double sigma, std::uint64_t seed) {
  if (!(sigma >= 0.0)) throw DomainError("noise sigma must be >= 0");
  if (sigma == 0.0) return img;
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 - 1.0;
  };
  GrayImage out = img;
  bool have_spare = false;
  double spare = 0.0;
  for (auto& px : out.pixels()) {
    double z;
    if (have_spare) {
      z = spare;
      have_spare = false;
    } else {
      double u, v, s;
      do {
        u = uniform();
        v = uniform();
        s = u * u + v * v;
      } while (s >= 1.0 || s == 0.0);
      const double m = std::sqrt(-2.0 * std::log(s) / s);
      z = u * m;
      spare = v * m;
      have_spare = true;
    }
    px = to_pixel(static_cast<double>(px) + sigma * z);
  }
  return out;
}

GrayImage apply_attack(const GrayImage& img, const AttackConfig& config) {
  if (!(config.magnitude >= 0.0)) throw DomainError("attack magnitude must be >= 0");
  switch (config.kind) {
    case AttackKind::kCrop:
      return crop_attack(img, static_cast<std::size_t>(std::lround(config.magnitude)),
                         config.crop_x, config.crop_y);
    case AttackKind::kRotation:
      return rotation_attack(img, config.magnitude);
    case AttackKind::kJpeg:
      return jpeg_attack(img, static_cast<int>(std::lround(config.magnitude)));
    case AttackKind::kGaussian:
      return gaussian_attack(img, config.magnitude, config.seed);
  }
  throw DomainError("unknown attack kind");
}

}  // namespace chaoswm
