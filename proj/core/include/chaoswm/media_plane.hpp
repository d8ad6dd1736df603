#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chaoswm/bit_vector.hpp"

namespace chaoswm {

/// 8-bit grayscale raster, row-major.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0);
  /// Throws DimensionMismatchError if pixels.size() != width * height.
  GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> pixels);

  std::size_t width() const noexcept { return width_; }
  std::size_t height() const noexcept { return height_; }
  std::size_t pixel_count() const noexcept { return pixels_.size(); }
  bool empty() const noexcept { return pixels_.empty(); }

  std::uint8_t operator()(std::size_t x, std::size_t y) const noexcept {
    return pixels_[y * width_ + x];
  }
  std::uint8_t& operator()(std::size_t x, std::size_t y) noexcept {
    return pixels_[y * width_ + x];
  }

  const std::vector<std::uint8_t>& pixels() const noexcept { return pixels_; }
  std::vector<std::uint8_t>& pixels() noexcept { return pixels_; }

  bool operator==(const GrayImage&) const = default;

 private:
  std::size_t width_ = 0;
  std::size_t height_ = 0;
  std::vector<std::uint8_t> pixels_;
};

/// Which bit planes of each pixel are most significant (authentication input)
/// and least significant (embedding channel). The two sets are disjoint.
class CoefficientPlan {
 public:
  /// MSCs {7,6,5,4}; LSCs (2,1,0).
  CoefficientPlan();
  /// Throws DomainError on overlap, out-of-range positions, or an empty LSC list.
  CoefficientPlan(std::vector<int> msc_bit_positions, std::vector<int> lsc_bit_positions);

  /// MSCs {7,6,5,4}; LSCs (3,2,1), the three planes right under the MSCs.
  static CoefficientPlan upper_lsc();

  /// Sorted most to least significant.
  const std::vector<int>& msc_bit_positions() const noexcept { return msc_; }
  /// In the plan's stated order.
  const std::vector<int>& lsc_bit_positions() const noexcept { return lsc_; }

  std::size_t lsc_count(const GrayImage& img) const noexcept {
    return img.pixel_count() * lsc_.size();
  }
  std::size_t msc_count(const GrayImage& img) const noexcept {
    return img.pixel_count() * msc_.size();
  }
  /// Largest change a full LSC rewrite can make to one pixel.
  int max_distortion() const noexcept;

  bool operator==(const CoefficientPlan&) const = default;

 private:
  std::vector<int> msc_;
  std::vector<int> lsc_;
};

BitVector extract_msc(const GrayImage& img, const CoefficientPlan& plan);
BitVector extract_lsc(const GrayImage& img, const CoefficientPlan& plan);

/// LSC j lives in pixel j / |lsc| at bit lsc_bit_positions[j % |lsc|].
bool read_lsc(const GrayImage& img, const CoefficientPlan& plan, std::size_t index);
/// In-place form of replace_lsc. Throws IndexError.
void write_lsc(GrayImage& img, const CoefficientPlan& plan, std::size_t index, bool bit);
GrayImage replace_lsc(GrayImage img, const CoefficientPlan& plan, std::size_t index, bool bit);

}  // namespace chaoswm
