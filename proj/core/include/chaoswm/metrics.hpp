#pragma once

#include <cstddef>

#include "chaoswm/bit_vector.hpp"
#include "chaoswm/media_plane.hpp"

namespace chaoswm {

struct SimilarityReport {
  std::size_t equal_bits = 0;
  std::size_t total_bits = 0;
  double percent = 0.0;

  /// At or below 50% the image has probably not been watermarked.
  bool probably_watermarked() const noexcept { return percent > 50.0; }
};

enum class Verdict {
  /// Similarity <= 50%: the image has probably not been watermarked.
  kNotWatermarked,
  /// Above 50% but within three binomial standard deviations of chance.
  kInconclusive,
  kDetected,
};

Verdict classify(const SimilarityReport& report);
const char* describe(Verdict verdict);

/// Throws DimensionMismatchError on different or zero lengths.
SimilarityReport similarity_percent(const BitVector& a, const BitVector& b);

double mean_squared_error(const GrayImage& a, const GrayImage& b);

/// 10 log10(255^2 / MSE). Identical images give +infinity.
double psnr(const GrayImage& a, const GrayImage& b);

/// |a - b| * gain per pixel, clamped to [0, 255].
GrayImage diff_image(const GrayImage& a, const GrayImage& b, double gain);

}  // namespace chaoswm
