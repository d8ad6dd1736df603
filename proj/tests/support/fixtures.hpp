#pragma once

// Deterministic test media: a 256x256 natural-looking carrier (smooth shading,
// edges and fine texture) and a 64x64 binary logo, plus random key helpers.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "chaoswm/keystream.hpp"
#include "chaoswm/media_plane.hpp"
#include "chaoswm/netpbm.hpp"

namespace chaoswm::testing {

inline GrayImage make_carrier(std::size_t width = 256, std::size_t height = 256,
                              std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> texture(0.0, 3.0);
  GrayImage img(width, height);
  const double w = static_cast<double>(width);
  const double h = static_cast<double>(height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double u = static_cast<double>(x) / w;
      const double v = static_cast<double>(y) / h;
      double value = 60.0 + 90.0 * u + 40.0 * v;
      value += 25.0 * std::sin(2.0 * std::numbers::pi * (1.5 * u + 0.5 * v));
      value += 15.0 * std::cos(2.0 * std::numbers::pi * 3.0 * v) * std::sin(std::numbers::pi * u);
      const double dx = u - 0.55, dy = v - 0.45;
      if (dx * dx + dy * dy < 0.04) value += 45.0;
      if (u > 0.1 && u < 0.3 && v > 0.6 && v < 0.9) value -= 50.0;
      value += texture(rng);
      img(x, y) = static_cast<std::uint8_t>(std::clamp(std::lround(value), 0L, 255L));
    }
  }
  return img;
}

inline BinaryImage make_logo(std::size_t width = 64, std::size_t height = 64) {
  BinaryImage wm{width, height, BitVector(width * height)};
  const double cx = (static_cast<double>(width) - 1) / 2.0;
  const double cy = (static_cast<double>(height) - 1) / 2.0;
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      const double dx = static_cast<double>(x) - cx, dy = static_cast<double>(y) - cy;
      const double r = std::sqrt(dx * dx + dy * dy);
      const bool ring = r > 0.30 * static_cast<double>(width) && r < 0.42 * static_cast<double>(width);
      const bool bar = std::abs(dx - dy) < 3.0 && r < 0.30 * static_cast<double>(width);
      const bool block = x < width / 5 && y > height * 3 / 4;
      wm.bits.set(y * width + x, ring || bar || block);
    }
  }
  return wm;
}

inline BitVector random_bits(std::size_t n, std::mt19937_64& rng) {
  BitVector v(n);
  for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1u);
  return v;
}

/// mu = 4, u0 uniform in [0.01, 0.99], burn-in uniform in [0, 10000].
inline SecretKey random_key(std::mt19937_64& rng, Mode mode = Mode::kUnauthenticated) {
  std::uniform_real_distribution<double> u0(0.01, 0.99);
  SecretKey key;
  key.mu = 4.0;
  key.u0 = u0(rng);
  key.burn_in = rng() % 10001;
  key.mode = mode;
  return key;
}

inline SecretKey case_study_key(Mode mode = Mode::kUnauthenticated) {
  return SecretKey{4.0, 0.61, 5000, mode};
}

}  // namespace chaoswm::testing
