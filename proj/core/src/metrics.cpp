#include "chaoswm/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "chaoswm/errors.hpp"

namespace chaoswm {

namespace {

void require_same_dims(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height()) {
    throw DimensionMismatchError("image dimensions differ");
  }
}

}  // namespace

SimilarityReport similarity_percent(const BitVector& a, const BitVector& b) {
  if (a.size() != b.size()) throw DimensionMismatchError("bit vectors differ in length");
  if (a.empty()) throw DimensionMismatchError("similarity of empty bit vectors is undefined");
  SimilarityReport r;
  r.total_bits = a.size();
  r.equal_bits = r.total_bits - a.hamming_distance(b);
  r.percent = 100.0 * static_cast<double>(r.equal_bits) / static_cast<double>(r.total_bits);
  return r;
}

Verdict classify(const SimilarityReport& report) {
  if (report.percent <= 50.0) return Verdict::kNotWatermarked;
  // Chance agreement has sd 50 / sqrt(n) percent.
  const double chance_bound = 50.0 + 3.0 * 50.0 / std::sqrt(static_cast<double>(report.total_bits));
  return report.percent > chance_bound ? Verdict::kDetected : Verdict::kInconclusive;
}

const char* describe(Verdict verdict) {
  switch (verdict) {
    case Verdict::kNotWatermarked:
      return "probably not watermarked";
    case Verdict::kInconclusive:
      return "inconclusive (within chance agreement)";
    case Verdict::kDetected:
      return "watermark detected";
  }
  return "unknown";
}

double mean_squared_error(const GrayImage& a, const GrayImage& b) {
  require_same_dims(a, b);
  if (a.empty()) throw DimensionMismatchError("empty images");
  std::uint64_t sum = 0;
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    const int d = int{a.pixels()[i]} - int{b.pixels()[i]};
    sum += static_cast<std::uint64_t>(d * d);
  }
  return static_cast<double>(sum) / static_cast<double>(a.pixel_count());
}

double psnr(const GrayImage& a, const GrayImage& b) {
  const double mse = mean_squared_error(a, b);
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(255.0 * 255.0 / mse);
}

GrayImage diff_image(const GrayImage& a, const GrayImage& b, double gain) {
  require_same_dims(a, b);
  if (!(gain > 0.0)) throw DomainError("gain must be positive");
  GrayImage out(a.width(), a.height());
  for (std::size_t i = 0; i < a.pixel_count(); ++i) {
    const double v = std::abs(int{a.pixels()[i]} - int{b.pixels()[i]}) * gain;
    out.pixels()[i] = static_cast<std::uint8_t>(std::clamp(std::lround(v), 0L, 255L));
  }
  return out;
}

}  // namespace chaoswm
