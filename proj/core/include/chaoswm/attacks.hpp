#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "chaoswm/media_plane.hpp"

namespace chaoswm {

// Deterministic image attacks. All of them keep the image dimensions and the
// [0, 255] pixel range.

enum class AttackKind { kCrop, kRotation, kJpeg, kGaussian };

std::string_view to_string(AttackKind kind);
/// Accepts crop, rotation, jpeg, gaussian. Throws DomainError otherwise.
AttackKind parse_attack_kind(std::string_view name);

struct AttackConfig {
  AttackKind kind = AttackKind::kCrop;
  /// Crop side in pixels, angle in degrees, JPEG level, or noise sigma.
  double magnitude = 0.0;
  /// Gaussian only.
  std::uint64_t seed = 0;
  std::size_t crop_x = 0;
  std::size_t crop_y = 0;
};

/// Zeroes the size x size square at (x0, y0), clipped to the image.
GrayImage crop_attack(const GrayImage& img, std::size_t size, std::size_t x0 = 0,
                      std::size_t y0 = 0);

enum class Interpolation { kNearest, kBilinear };

/// Rotate by theta about the image center, then by -theta. Samples outside the
/// frame read as 0; the intermediate image is kept unrounded.
GrayImage rotation_attack(const GrayImage& img, double theta_degrees,
                          Interpolation interpolation = Interpolation::kNearest);

/// Standard JPEG luminance quantization table, row-major.
const std::array<int, 64>& jpeg_luminance_table();

/// Quantization step for each coefficient at a compression level: the standard
/// table scaled by level / 50 (IJG quality 100 - level), rounded, at least 1.
std::array<int, 64> jpeg_quantization_table(int level);

/// Blockwise 8x8 DCT quantize/dequantize round trip (no entropy coding). Edge
/// blocks are padded by replication. Throws DomainError for level < 1.
GrayImage jpeg_attack(const GrayImage& img, int level);

/// Adds rounded N(0, sigma^2) noise and clamps. Samples come from the Marsaglia
/// polar method over std::mt19937_64(seed) with 53-bit uniforms.
GrayImage gaussian_attack(const GrayImage& img, double sigma, std::uint64_t seed);

/// Throws DomainError for a negative magnitude.
GrayImage apply_attack(const GrayImage& img, const AttackConfig& config);

}  // namespace chaoswm
